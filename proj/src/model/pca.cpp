#include "model/pca.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "core/error.hpp"

namespace smltt::model {

namespace cl {
namespace {
ClP leaf(ClKind k) { return std::make_shared<const Cl>(Cl{k, "", nullptr, nullptr}); }
}  // namespace

ClP S() {
  static const ClP s = leaf(ClKind::S);
  return s;
}
ClP K() {
  static const ClP k = leaf(ClKind::K);
  return k;
}
ClP I() {
  static const ClP i = app(app(S(), K()), K());
  return i;
}
ClP Pr() {
  static const ClP p = leaf(ClKind::Pr);
  return p;
}
ClP Pr1() {
  static const ClP p = leaf(ClKind::Pr1);
  return p;
}
ClP Pr2() {
  static const ClP p = leaf(ClKind::Pr2);
  return p;
}
ClP atom(const std::string& n) { return std::make_shared<const Cl>(Cl{ClKind::Atom, n, nullptr, nullptr}); }
ClP var(const std::string& n) { return std::make_shared<const Cl>(Cl{ClKind::Var, n, nullptr, nullptr}); }
ClP app(ClP f, ClP a) { return std::make_shared<const Cl>(Cl{ClKind::App, "", std::move(f), std::move(a)}); }
ClP apps(ClP f, const std::vector<ClP>& args) {
  for (const auto& a : args) f = app(f, a);
  return f;
}
}  // namespace cl

bool clEqual(const ClP& a, const ClP& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ClKind::App: return clEqual(a->f, b->f) && clEqual(a->a, b->a);
    case ClKind::Atom:
    case ClKind::Var: return a->name == b->name;
    default: return true;
  }
}

std::size_t clSize(const ClP& t) { return t->kind == ClKind::App ? clSize(t->f) + clSize(t->a) : 1; }

namespace {

const char* leafName(ClKind k) {
  switch (k) {
    case ClKind::S: return "S";
    case ClKind::K: return "K";
    case ClKind::Pr: return "Pr";
    case ClKind::Pr1: return "Pr1";
    case ClKind::Pr2: return "Pr2";
    default: return "?";
  }
}

void unwind(ClP t, ClP& head, std::vector<ClP>& args) {
  args.clear();
  while (t->kind == ClKind::App) {
    args.push_back(t->a);
    t = t->f;
  }
  head = t;
  std::reverse(args.begin(), args.end());
}

}  // namespace

std::string printCl(const ClP& t) {
  if (t->kind == ClKind::Atom || t->kind == ClKind::Var) return t->name;
  if (t->kind != ClKind::App) return leafName(t->kind);
  ClP head;
  std::vector<ClP> args;
  unwind(t, head, args);
  std::string s = "(" + printCl(head);
  for (const auto& a : args) s += " " + printCl(a);
  return s + ")";
}

namespace {

struct ClParser {
  std::string src;
  std::size_t p = 0;
  std::vector<std::string> bound;

  [[noreturn]] void fail(const std::string& m) const {
    throw SmlttError(ErrorKind::SyntaxError, "realiser term: " + m + " at offset " + std::to_string(p));
  }
  void ws() {
    while (p < src.size() && std::isspace(static_cast<unsigned char>(src[p]))) ++p;
  }
  std::string word() {
    ws();
    std::size_t s = p;
    while (p < src.size() && !std::isspace(static_cast<unsigned char>(src[p])) && src[p] != '(' && src[p] != ')') ++p;
    if (s == p) fail("expected a word");
    return src.substr(s, p - s);
  }
  ClP term() {
    ws();
    if (p >= src.size()) fail("unexpected end");
    if (src[p] == ')') fail("unexpected ')'");
    if (src[p] == '(') {
      ++p;
      ws();
      std::size_t save = p;
      if (p < src.size() && src[p] != '(' && src[p] != ')') {
        std::string w = word();
        if (w == "lam") {
          std::string x = word();
          bound.push_back(x);
          ClP body = term();
          bound.pop_back();
          close();
          return bracket(x, body);
        }
        p = save;
      }
      ClP head = term();
      for (;;) {
        ws();
        if (p < src.size() && src[p] == ')') {
          ++p;
          return head;
        }
        head = cl::app(head, term());
      }
    }
    std::string w = word();
    for (auto it = bound.rbegin(); it != bound.rend(); ++it)
      if (*it == w) return cl::var(w);
    if (w == "S") return cl::S();
    if (w == "K") return cl::K();
    if (w == "I") return cl::I();
    if (w == "Pr") return cl::Pr();
    if (w == "Pr1") return cl::Pr1();
    if (w == "Pr2") return cl::Pr2();
    if (w == "fix") return pcaFix();
    if (w == "phi") return phiRealiser();
    if (w == "lam") fail("lam outside parentheses");
    return cl::atom(w);
  }
  void close() {
    ws();
    if (p >= src.size() || src[p] != ')') fail("expected ')'");
    ++p;
  }
};

struct Reducer {
  std::uint64_t fuel;
  std::uint64_t steps = 0;
  int nesting = 0;

  bool tick() {
    if (steps >= fuel) return false;
    ++steps;
    return true;
  }

  std::optional<ClP> whnf(ClP t) {
    ClP head;
    std::vector<ClP> args;
    auto rebuild = [&](ClP h, std::size_t from) {
      for (std::size_t k = from; k < args.size(); ++k) h = cl::app(h, args[k]);
      return h;
    };
    for (;;) {
      unwind(t, head, args);
      switch (head->kind) {
        case ClKind::K:
          if (args.size() < 2) return t;
          if (!tick()) return std::nullopt;
          t = rebuild(args[0], 2);
          continue;
        case ClKind::S:
          if (args.size() < 3) return t;
          if (!tick()) return std::nullopt;
          t = rebuild(cl::app(cl::app(args[0], args[2]), cl::app(args[1], args[2])), 3);
          continue;
        case ClKind::Pr1:
        case ClKind::Pr2: {
          if (args.empty()) return t;
          if (!tick()) return std::nullopt;
          if (++nesting > 20000) return std::nullopt;
          auto p = whnf(args[0]);
          --nesting;
          if (!p) return std::nullopt;
          ClP ph;
          std::vector<ClP> pa;
          unwind(*p, ph, pa);
          if (ph->kind == ClKind::Pr && pa.size() == 2) {
            t = rebuild(pa[head->kind == ClKind::Pr1 ? 0 : 1], 1);
            continue;
          }
          args[0] = *p;
          return rebuild(head, 0);
        }
        default:
          return t;
      }
    }
  }
};

int arity(ClKind k) {
  switch (k) {
    case ClKind::S: return 3;
    case ClKind::K: return 2;
    case ClKind::Pr1:
    case ClKind::Pr2: return 1;
    default: return -1;
  }
}

struct Comparer {
  std::uint64_t fuel;
  int fresh = 0;
  int nodes = 0;

  bool eq(const ClP& a, const ClP& b, int depth) {
    if (++nodes > 4000) return true;  // explored enough
    Reducer ra{fuel}, rb{fuel};
    auto va = ra.whnf(a);
    auto vb = rb.whnf(b);
    if (!va || !vb) return !va && !vb;
    ClP ha, hb;
    std::vector<ClP> xa, xb;
    unwind(*va, ha, xa);
    unwind(*vb, hb, xb);
    bool fa = arity(ha->kind) > static_cast<int>(xa.size());
    bool fb = arity(hb->kind) > static_cast<int>(xb.size());
    if (fa || fb) {
      if (!(fa && fb)) return false;
      if (depth <= 0) return true;
      ClP z = cl::atom("#" + std::to_string(fresh++));
      return eq(cl::app(*va, z), cl::app(*vb, z), depth - 1);
    }
    if (ha->kind != hb->kind || xa.size() != xb.size()) return false;
    if ((ha->kind == ClKind::Atom || ha->kind == ClKind::Var) && ha->name != hb->name) return false;
    if (depth <= 0) return true;
    for (std::size_t k = 0; k < xa.size(); ++k)
      if (!eq(xa[k], xb[k], depth - 1)) return false;
    return true;
  }
};

bool occurs(const std::string& x, const ClP& t) {
  if (t->kind == ClKind::Var) return t->name == x;
  if (t->kind == ClKind::App) return occurs(x, t->f) || occurs(x, t->a);
  return false;
}

std::uint64_t headCost(const ClP& t) {
  Reducer r{1u << 20};
  r.whnf(t);
  return r.steps;
}

}  // namespace

ClP parseCl(const std::string& text) {
  ClParser p{text, 0, {}};
  ClP t = p.term();
  p.ws();
  if (p.p != p.src.size()) p.fail("trailing input");
  return t;
}

ReduceResult reduce(const ClP& t, std::uint64_t fuel) {
  Reducer r{fuel};
  ReduceResult out;
  out.value = r.whnf(t);
  out.steps = r.steps;
  return out;
}

bool kleeneEqual(const ClP& a, const ClP& b, std::uint64_t fuel, int depth) {
  Comparer c{fuel};
  return c.eq(a, b, depth);
}

ClP bracket(const std::string& x, const ClP& body) {
  if (body->kind == ClKind::Var && body->name == x) return cl::I();
  if (!occurs(x, body)) return cl::app(cl::K(), body);
  return cl::app(cl::app(cl::S(), bracket(x, body->f)), bracket(x, body->a));
}

ClP pcaFix() {
  static const ClP fix = [] {
    using namespace cl;
    // W x f a = f (x x f) a, fix = W W
    ClP body = apps(var("f"), {apps(var("x"), {var("x"), var("f")}), var("a")});
    ClP w = bracket("x", bracket("f", bracket("a", body)));
    return app(w, w);
  }();
  return fix;
}

ClP phiRealiser() {
  static const ClP phi = [] {
    using namespace cl;
    // Λf.Λe.Λk.Λn. e k n (Λm. f e k m)
    ClP rec = bracket("m", apps(var("f"), {var("e"), var("k"), var("m")}));
    ClP body = apps(var("e"), {var("k"), var("n"), rec});
    return bracket("f", bracket("e", bracket("k", bracket("n", body))));
  }();
  return phi;
}

std::uint64_t fixUnfoldCost() {
  static const std::uint64_t c = headCost(cl::apps(pcaFix(), {cl::atom("f"), cl::atom("a")}));
  return c;
}

std::uint64_t phiUnfoldCost() {
  static const std::uint64_t c =
      headCost(cl::apps(pcaFix(), {phiRealiser(), cl::atom("fr"), cl::atom("g"), cl::atom("n")}));
  return c;
}

namespace {

bool lawHolds(const ClP& lhs, std::uint64_t lhsExtra, const ClP& rhs, std::uint64_t fuel) {
  auto l = reduce(lhs, fuel + lhsExtra);
  auto r = reduce(rhs, fuel);
  if (l.diverged() || r.diverged()) return l.diverged() && r.diverged();
  return kleeneEqual(*l.value, *r.value, fuel);
}

}  // namespace

bool checkFixLaw(const ClP& f, const ClP& a, std::uint64_t fuel) {
  using namespace cl;
  return lawHolds(apps(pcaFix(), {f, a}), fixUnfoldCost(), apps(f, {app(pcaFix(), f), a}), fuel);
}

bool checkPhiLaw(const ClP& fr, const ClP& gr, const ClP& n, std::uint64_t fuel) {
  using namespace cl;
  ClP F = app(pcaFix(), phiRealiser());
  ClP lhs = apps(F, {fr, gr, n});
  ClP rec = bracket("m", apps(F, {fr, gr, var("m")}));
  ClP rhs = apps(fr, {gr, n, rec});
  return lawHolds(lhs, phiUnfoldCost(), rhs, fuel);
}

}  // namespace smltt::model
