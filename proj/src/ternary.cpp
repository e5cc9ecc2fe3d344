#include "herbrand/ternary.hpp"

namespace herbrand {

std::string_view to_string(Ternary::Reason r) {
  switch (r) {
    case Ternary::Reason::None: return "none";
    case Ternary::Reason::Fuel: return "fuel";
    case Ternary::Reason::ProbeLimit: return "probe-limit";
  }
  return "none";
}

std::string Ternary::str() const {
  std::string out;
  switch (kind_) {
    case Kind::Holds: out = exact_ ? "Holds" : "Holds (probe-level)"; break;
    case Kind::Fails:
      out = "Fails";
      if (witness_) out += " witness " + witness_->str();
      break;
    case Kind::Unknown: out = "Unknown (" + std::string(to_string(reason_)) + ")"; break;
  }
  if (!note_.empty()) out += ": " + note_;
  return out;
}

Ternary both(const Ternary& a, const Ternary& b) {
  if (a.is_fails()) return a;
  if (b.is_fails()) return b;
  if (a.is_unknown()) return a;
  if (b.is_unknown()) return b;
  return Ternary::holds(a.exact() && b.exact());
}

Ternary either(const Ternary& a, const Ternary& b) {
  if (a.exact()) return a;
  if (b.exact()) return b;
  if (a.is_holds()) return a;
  if (b.is_holds()) return b;
  if (a.is_unknown()) return a;
  if (b.is_unknown()) return b;
  return a;
}

}  // namespace herbrand
