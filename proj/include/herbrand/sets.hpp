#pragma once

#include <map>
#include <string>
#include <vector>

#include "herbrand/term.hpp"

namespace herbrand {

using Label = std::string;
/// A finite set of labels, sorted and duplicate-free.
using LabelSet = std::vector<Label>;

LabelSet make_labels(std::vector<Label> labels);
bool has_label(const LabelSet& s, const Label& x);

/// A total function between finite label sets, stored as a table.
class FunctionTable {
public:
  FunctionTable() = default;
  /// Throws Error unless `table` is total on `domain` and lands in `codomain`.
  FunctionTable(LabelSet domain, LabelSet codomain, std::map<Label, Label> table);

  static FunctionTable identity(const LabelSet& s);
  static FunctionTable constant(const LabelSet& domain, const LabelSet& codomain, const Label& value);

  const LabelSet& domain() const { return domain_; }
  const LabelSet& codomain() const { return codomain_; }
  const std::map<Label, Label>& table() const { return table_; }

  const Label& operator()(const Label& x) const;
  /// f⁻¹(y), in domain order.
  LabelSet fiber(const Label& y) const;
  LabelSet image() const;
  bool injective() const;
  bool surjective() const;

  std::string str() const;
  friend bool operator==(const FunctionTable&, const FunctionTable&) = default;

private:
  LabelSet domain_, codomain_;
  std::map<Label, Label> table_;
};

/// g ∘ f
FunctionTable compose(const FunctionTable& g, const FunctionTable& f);

/// Every function from `domain` to `codomain`, in lexicographic table order.
std::vector<FunctionTable> all_functions(const LabelSet& domain, const LabelSet& codomain);

struct Sexpr;
LabelSet labels_from_sexpr(const Sexpr& e, std::string_view head);
std::string labels_str(std::string_view head, const LabelSet& s);
/// (function (domain x…) (codomain y…) (map (x y)…))
FunctionTable function_from_sexpr(const Sexpr& e);
FunctionTable parse_function(std::string_view text);

}  // namespace herbrand
