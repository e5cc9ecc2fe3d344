#include "herbrand/eval.hpp"

#include <vector>

namespace herbrand {

namespace {

struct OutOfFuel {};
struct StuckTerm {
  std::string reason;
};

// Nesting bound for forced sub-evaluations; beyond it the computation is
// reported as diverged instead of exhausting the native stack.
constexpr int kMaxDepth = 20000;

class Machine {
public:
  explicit Machine(Fuel fuel) : budget_(fuel.steps) {}

  std::uint64_t used() const { return used_; }

  Term nf(const Term& t) {
    DepthGuard g(*this);
    Term h = whnf(t);
    std::vector<Term> args;
    Term head = h;
    while (head.is(Term::Kind::App)) {
      args.push_back(head.arg());
      head = head.fun();
    }
    switch (head.kind()) {
      case Term::Kind::Pair: head = Term::pair(nf(head.first()), nf(head.second())); break;
      case Term::Kind::Seq: {
        std::vector<Term> items;
        items.reserve(head.items().size());
        for (const auto& i : head.items()) items.push_back(nf(i));
        head = Term::seq(std::move(items));
        break;
      }
      default: break;
    }
    for (auto it = args.rbegin(); it != args.rend(); ++it) head = Term::app(head, nf(*it));
    return head;
  }

  Term whnf(Term cur) {
    DepthGuard g(*this);
    std::vector<Term> args;  // back() is the next argument
    auto pop = [&] {
      Term a = std::move(args.back());
      args.pop_back();
      return a;
    };
    for (;;) {
      while (cur.is(Term::Kind::App)) {
        args.push_back(cur.arg());
        cur = cur.fun();
      }
      bool reduced = false;
      switch (cur.kind()) {
        case Term::Kind::K:
          if (args.size() >= 2) {
            tick();
            Term a = pop();
            pop();
            cur = std::move(a);
            reduced = true;
          }
          break;
        case Term::Kind::S:
          if (args.size() >= 3) {
            tick();
            Term x = pop();
            Term y = pop();
            Term z = pop();
            cur = Term::app(Term::app(x, z), Term::app(y, z));
            reduced = true;
          }
          break;
        case Term::Kind::Prim: {
          auto n = static_cast<std::size_t>(arity(cur.primitive()));
          if (args.size() >= n) {
            tick();
            std::vector<Term> xs;
            for (std::size_t i = 0; i < n; ++i) xs.push_back(pop());
            cur = contract(cur.primitive(), xs);
            reduced = true;
          }
          break;
        }
        case Term::Kind::Num:
        case Term::Kind::Pair:
        case Term::Kind::Seq:
          if (!args.empty()) throw StuckTerm{"data value in function position: " + cur.str()};
          break;
        default:
          break;
      }
      if (reduced) continue;
      while (!args.empty()) cur = Term::app(cur, pop());
      return cur;
    }
  }

private:
  struct DepthGuard {
    explicit DepthGuard(Machine& m) : m(m) {
      if (++m.depth_ > kMaxDepth) {
        --m.depth_;
        throw OutOfFuel{};
      }
    }
    ~DepthGuard() { --m.depth_; }
    Machine& m;
  };

  void tick() {
    if (used_ >= budget_) throw OutOfFuel{};
    ++used_;
  }

  Term force_seq(const Term& t, std::string_view who) {
    Term v = whnf(t);
    if (!v.is(Term::Kind::Seq)) throw StuckTerm{std::string(who) + " expects a sequence code, got " + v.str()};
    return v;
  }

  std::uint64_t force_num(const Term& t, std::string_view who) {
    Term v = whnf(t);
    if (!v.is(Term::Kind::Num)) throw StuckTerm{std::string(who) + " expects a numeral, got " + v.str()};
    return v.number();
  }

  Term force_pair(const Term& t, std::string_view who) {
    Term v = whnf(t);
    if (!v.is(Term::Kind::Pair)) throw StuckTerm{std::string(who) + " expects a pair, got " + v.str()};
    return v;
  }

  Term contract(Prim p, const std::vector<Term>& x) {
    switch (p) {
      case Prim::Len:
        return Term::num(force_seq(x[0], "len").items().size());
      case Prim::Proj: {
        Term s = force_seq(x[0], "proj");
        std::uint64_t i = force_num(x[1], "proj");
        if (i < 1 || i > s.items().size())
          throw StuckTerm{"proj index " + std::to_string(i) + " out of range 1.." +
                          std::to_string(s.items().size())};
        return s.items()[i - 1];
      }
      case Prim::Cat: {
        Term outer = force_seq(x[0], "cat");
        std::vector<Term> out;
        for (const auto& part : outer.items()) {
          Term s = force_seq(part, "cat");
          out.insert(out.end(), s.items().begin(), s.items().end());
        }
        return Term::seq(std::move(out));
      }
      case Prim::Succ:
        return Term::num(force_num(x[0], "succ") + 1);
      case Prim::Ncase: {
        std::uint64_t n = force_num(x[0], "ncase");
        if (n == 0) return x[1];
        return Term::app(x[2], Term::num(n - 1));
      }
      case Prim::Fst:
        return force_pair(x[0], "fst").first();
      case Prim::Snd:
        return force_pair(x[0], "snd").second();
      case Prim::Pair:
        return Term::pair(x[0], x[1]);
      case Prim::Cons: {
        Term s = force_seq(x[1], "cons");
        std::vector<Term> out{x[0]};
        out.insert(out.end(), s.items().begin(), s.items().end());
        return Term::seq(std::move(out));
      }
      case Prim::Map: {
        Term s = force_seq(x[1], "map");
        std::vector<Term> out;
        out.reserve(s.items().size());
        for (const auto& i : s.items()) out.push_back(Term::app(x[0], i));
        return Term::seq(std::move(out));
      }
      case Prim::Iter: {
        std::uint64_t n = force_num(x[0], "iter");
        Term acc = x[2];
        for (std::uint64_t i = 0; i < n; ++i) {
          tick();
          acc = Term::app(x[1], acc);
        }
        return acc;
      }
    }
    throw StuckTerm{"unknown primitive"};
  }

  std::uint64_t budget_;
  std::uint64_t used_ = 0;
  int depth_ = 0;
};

}  // namespace

EvalResult normalize(const Term& t, Fuel fuel) {
  Machine m(fuel);
  EvalResult r;
  try {
    r.value = m.nf(t);
    r.status = EvalResult::Status::Value;
  } catch (const OutOfFuel&) {
    r.status = EvalResult::Status::Diverged;
  } catch (const StuckTerm& s) {
    r.status = EvalResult::Status::Stuck;
    r.reason = s.reason;
  }
  r.steps = m.used();
  return r;
}

EvalResult apply(const Term& f, const Term& a, Fuel fuel) { return normalize(Term::app(f, a), fuel); }

Term normal_form(const Term& t, Fuel fuel) {
  EvalResult r = normalize(t, fuel);
  if (r.diverged()) throw Error("no normal form within " + std::to_string(fuel.steps) + " steps: " + t.str());
  if (r.stuck()) throw Error("evaluation stuck: " + r.reason);
  return r.value;
}

}  // namespace herbrand
