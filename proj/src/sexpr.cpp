#include "herbrand/sexpr.hpp"

#include <cctype>
#include <charconv>

namespace herbrand {

const std::string& Sexpr::head() const {
  static const std::string none;
  if (!is_list || list.empty() || list.front().is_list) return none;
  return list.front().atom;
}

namespace {

class Reader {
public:
  explicit Reader(std::string_view text) : text_(text) {}

  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }

  Sexpr read() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    Sexpr e;
    e.offset = pos_;
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      e.is_list = true;
      for (;;) {
        skip();
        if (pos_ >= text_.size()) throw ParseError("unclosed '('", e.offset);
        if (text_[pos_] == ')') {
          ++pos_;
          return e;
        }
        e.list.push_back(read());
      }
    }
    if (c == ')') throw ParseError("unexpected ')'", pos_);
    if (c == '"') {
      ++pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
        e.atom.push_back(text_[pos_++]);
      }
      if (pos_ >= text_.size()) throw ParseError("unterminated string", e.offset);
      ++pos_;
      return e;
    }
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != ';')
      e.atom.push_back(text_[pos_++]);
    return e;
  }

  std::size_t pos() const { return pos_; }

private:
  void skip() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else if (text_[pos_] == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::uint64_t parse_nat(const Sexpr& e) {
  if (e.is_list) throw ParseError("expected natural number", e.offset);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(e.atom.data(), e.atom.data() + e.atom.size(), v);
  if (ec != std::errc() || ptr != e.atom.data() + e.atom.size())
    throw ParseError("expected natural number, got '" + e.atom + "'", e.offset);
  return v;
}

}  // namespace

Sexpr read_sexpr(std::string_view text) {
  Reader r(text);
  Sexpr e = r.read();
  if (!r.at_end()) throw ParseError("trailing input", r.pos());
  return e;
}

std::vector<Sexpr> read_sexprs(std::string_view text) {
  Reader r(text);
  std::vector<Sexpr> out;
  while (!r.at_end()) out.push_back(r.read());
  return out;
}

std::string quote_atom(std::string_view a) {
  bool plain = !a.empty();
  for (char c : a)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '"' ||
        c == ';' || c == '\\')
      plain = false;
  if (plain) return std::string(a);
  std::string out = "\"";
  for (char c : a) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

Term term_from_sexpr(const Sexpr& e) {
  if (!e.is_list) {
    if (e.atom == "S") return Term::S();
    if (e.atom == "K") return Term::K();
    if (e.atom == "I") return I();
    if (auto p = prim_from_name(e.atom)) return Term::prim(*p);
    throw ParseError("unknown term atom '" + e.atom + "'", e.offset);
  }
  if (e.list.empty()) throw ParseError("empty term", e.offset);
  const std::string& h = e.head();
  auto want = [&](std::size_t n) {
    if (e.list.size() != n + 1)
      throw ParseError("'" + h + "' expects " + std::to_string(n) + " argument(s)", e.offset);
  };
  if (h == "num") {
    want(1);
    return Term::num(parse_nat(e.list[1]));
  }
  if (h == "var") {
    want(1);
    if (e.list[1].is_list) throw ParseError("variable name must be an atom", e.list[1].offset);
    return Term::var(e.list[1].atom);
  }
  if (h == "pair") {
    want(2);
    return Term::pair(term_from_sexpr(e.list[1]), term_from_sexpr(e.list[2]));
  }
  if (h == "seq") {
    std::vector<Term> items;
    for (std::size_t i = 1; i < e.list.size(); ++i) items.push_back(term_from_sexpr(e.list[i]));
    return Term::seq(std::move(items));
  }
  if (h == "app") {
    if (e.list.size() < 3) throw ParseError("'app' expects at least 2 arguments", e.offset);
    Term t = term_from_sexpr(e.list[1]);
    for (std::size_t i = 2; i < e.list.size(); ++i) t = Term::app(t, term_from_sexpr(e.list[i]));
    return t;
  }
  throw ParseError("unknown term form '" + h + "'", e.offset);
}

}  // namespace herbrand
