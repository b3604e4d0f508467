#include "frontend/elaborate.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace smltt {

namespace {

using namespace mk;

struct Arg {
  bool sized;  // applied with @
  STermP term;
};

struct Elab {
  Scope scope;
  int notationDepth = 0;

  [[noreturn]] static void fail(ErrorKind k, const STermP& at, const std::string& msg) {
    throw SmlttError(k, msg, at->line, at->col);
  }

  Elab push(const std::string& n) const {
    Elab e = *this;
    e.scope.locals.push_back(n);
    return e;
  }

  Elab pushAll(const std::vector<std::string>& ns) const {
    Elab e = *this;
    for (const auto& n : ns) e.scope.locals.push_back(n);
    return e;
  }

  static const char* noun(const STermP& s) {
    switch (s->kind) {
      case SKind::Lam: return "a λ-abstraction";
      case SKind::ForLam: return "a ∀-abstraction";
      case SKind::Pair: return "a pair";
      case SKind::ExPair: return "an ∃-package";
      case SKind::Num: return "a size literal";
      case SKind::Suc: return "a size successor";
      default: return "this term";
    }
  }

  // El around a large type only arises from a %type argument landing in a
  // type position of a notation body; the type itself is meant.
  static TermP collapseEl(const TermP& t) {
    if (t->kids.empty()) return t;
    std::vector<TermP> kids;
    bool changed = false;
    for (const auto& k : t->kids) {
      kids.push_back(collapseEl(k));
      changed = changed || kids.back() != k;
    }
    if (t->tag == Tag::El) {
      switch (kids[0]->tag) {
        case Tag::U: case Tag::El: case Tag::Pi: case Tag::Sigma: case Tag::Id:
        case Tag::Bot: case Tag::Top: case Tag::Bool: case Tag::Size:
          return kids[0];
        default: break;
      }
    }
    if (!changed) return t;
    auto n = std::make_shared<Term>(*t);
    n->kids = std::move(kids);
    return n;
  }

  [[noreturn]] static void ambiguous(const STermP& s) {
    fail(ErrorKind::ElaborationAmbiguity, s,
         std::string("cannot use ") + noun(s) + " in type position; annotate or wrap it with El explicitly");
  }

  TermP run(const STermP& s, Mode mode) {
    switch (s->kind) {
      case SKind::Ident:
      case SKind::App:
      case SKind::ForApp:
      case SKind::Elim:
        return spine(s, mode);
      case SKind::Num:
        if (mode == Mode::Type) ambiguous(s);
        return sizeLit(s->num);
      case SKind::Suc:
        if (mode == Mode::Type) ambiguous(s);
        return szSuc(run(s->kids[0], Mode::Term));
      case SKind::Lam:
      case SKind::ForLam: {
        if (mode == Mode::Type) ambiguous(s);
        TermP body = pushAll(s->binders).run(s->kids[0], Mode::Term);
        for (std::size_t k = 0; k < s->binders.size(); ++k) body = s->kind == SKind::Lam ? lam(body) : forLam(body);
        return body;
      }
      case SKind::Pair:
        if (mode == Mode::Type) ambiguous(s);
        return pair(run(s->kids[0], Mode::Term), run(s->kids[1], Mode::Term));
      case SKind::ExPair:
        if (mode == Mode::Type) ambiguous(s);
        return exPair(run(s->kids[0], Mode::Term), run(s->kids[1], Mode::Term));
      case SKind::Ann: {
        TermP a = ann(run(s->kids[0], Mode::Term), run(s->kids[1], Mode::Type));
        return mode == Mode::Type ? el(a) : a;
      }
      case SKind::Pi:
      case SKind::Sigma:
        return binder(s, mode);
      case SKind::Forall:
      case SKind::Exists: {
        TermP bound = s->kids.size() == 2 ? run(s->kids[0], Mode::Term) : nullptr;
        TermP code = quant(s->kind == SKind::Forall, s->binders, 0, bound, s->kids.back());
        return mode == Mode::Type ? el(code) : code;
      }
      case SKind::Leq:
      case SKind::Lt: {
        TermP i = run(s->kids[0], Mode::Term);
        if (s->kind == SKind::Lt) i = szSuc(i);
        TermP code = leq(i, run(s->kids[1], Mode::Term));
        return mode == Mode::Type ? el(code) : code;
      }
      case SKind::ForceType:
        return run(s->kids[0], Mode::Type);
      case SKind::ForceTerm:
        return run(s->kids[0], Mode::Term);
      case SKind::Let: {
        // a macro: the bound term is copied into each use
        TermP e = run(s->kids[0], Mode::Term);
        return collapseEl(substTop(push(s->binders[0]).run(s->kids[1], mode), e));
      }
    }
    fail(ErrorKind::SyntaxError, s, "unsupported syntax");
  }

  TermP binder(const STermP& s, Mode mode) {
    bool isPi = s->kind == SKind::Pi;
    auto former = [&](TermP a, TermP b) {
      if (mode == Mode::Type) return isPi ? pi(std::move(a), std::move(b)) : sigma(std::move(a), std::move(b));
      return isPi ? piCode(std::move(a), std::move(b)) : sigCode(std::move(a), std::move(b));
    };
    TermP dom = run(s->kids[0], mode);
    if (s->binders.empty()) return former(dom, weaken(run(s->kids[1], mode), 0, 1));
    TermP body = pushAll(s->binders).run(s->kids[1], mode);
    std::size_t n = s->binders.size();
    for (std::size_t k = n; k-- > 0;) body = former(weaken(dom, 0, static_cast<std::uint32_t>(k)), body);
    return body;
  }

  // forall j < i . A  ~>  ForallCode(j. PiCode(El(^j <= i), _. A))
  TermP quant(bool isForall, const std::vector<std::string>& names, std::size_t k, const TermP& bound, const STermP& body) {
    Elab inner = push(names[k]);
    TermP b = k + 1 < names.size() ? inner.quant(isForall, names, k + 1, bound ? weaken(bound, 0, 1) : nullptr, body)
                                   : inner.run(body, Mode::Term);
    if (bound) {
      TermP guard = leq(szSuc(var(0)), weaken(bound, 0, 1));
      b = isForall ? piCode(guard, weaken(b, 0, 1)) : sigCode(guard, weaken(b, 0, 1));
    }
    return isForall ? forall(b) : exists(b);
  }

  static int arity(const std::string& n) {
    if (n == "Id") return 3;
    if (n == "El" || n == "refl" || n == "fst" || n == "snd" || n == "fix" || n == "fixb") return 1;
    if (n == "U" || n == "Size" || n == "Bool" || n == "Top" || n == "Bot" || n == "tt" || n == "ff" || n == "star")
      return 0;
    return -1;
  }

  static int elimArgs(const std::string& n) {
    if (n == "J" || n == "ind_Bool") return 3;
    if (n == "ind_Top") return 2;
    return 1;
  }

  TermP spine(const STermP& s, Mode mode) {
    std::vector<Arg> args;
    STermP head = s;
    while (head->kind == SKind::App || head->kind == SKind::ForApp) {
      args.push_back({head->kind == SKind::ForApp, head->kids[1]});
      head = head->kids[0];
    }
    std::reverse(args.begin(), args.end());

    auto take = [&](std::size_t n, const std::string& what) {
      if (args.size() < n)
        fail(ErrorKind::SyntaxError, head, what + " expects " + std::to_string(n) + " argument" + (n == 1 ? "" : "s"));
      for (std::size_t k = 0; k < n; ++k)
        if (args[k].sized) fail(ErrorKind::SyntaxError, args[k].term, what + " cannot take a size argument with @");
      std::vector<STermP> out;
      for (std::size_t k = 0; k < n; ++k) out.push_back(args[k].term);
      args.erase(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(n));
      return out;
    };
    auto applyRest = [&](TermP t) {
      for (const auto& a : args) t = a.sized ? forApp(t, run(a.term, Mode::Term)) : app(t, run(a.term, Mode::Term));
      return t;
    };
    auto asType = [&](TermP t) { return mode == Mode::Type ? el(std::move(t)) : t; };

    if (head->kind == SKind::Elim) {
      auto rest = take(static_cast<std::size_t>(elimArgs(head->name)), head->name);
      std::vector<TermP> xs;
      for (const auto& r : rest) xs.push_back(run(r, Mode::Term));
      const auto& g = head->groups;
      auto need = [&](std::size_t gi, std::size_t n) {
        if (g[gi].size() != n)
          fail(ErrorKind::SyntaxError, head, head->name + " expects " + std::to_string(n) + " bound name" + (n == 1 ? "" : "s") +
                                                 " in group " + std::to_string(gi + 1));
      };
      TermP t;
      if (head->name == "J") {
        need(0, 3);
        need(1, 1);
        t = J(pushAll(g[0]).run(head->kids[0], Mode::Type), pushAll(g[1]).run(head->kids[1], Mode::Term), xs[0], xs[1], xs[2]);
      } else if (head->name == "ind_Ex") {
        need(0, 1);
        need(1, 2);
        t = exInd(pushAll(g[0]).run(head->kids[0], Mode::Term), pushAll(g[1]).run(head->kids[1], Mode::Term), xs[0]);
      } else {
        need(0, 1);
        TermP m = pushAll(g[0]).run(head->kids[0], Mode::Type);
        if (head->name == "ind_Bot") t = botInd(m, xs[0]);
        else if (head->name == "ind_Top") t = topInd(m, xs[0], xs[1]);
        else t = boolInd(m, xs[0], xs[1], xs[2]);
      }
      return asType(applyRest(t));
    }

    if (head->kind != SKind::Ident) {
      if (args.empty()) return run(head, mode);
      return asType(applyRest(run(head, Mode::Term)));
    }

    const std::string& n = head->name;
    const auto& locals = scope.locals;
    for (std::size_t k = locals.size(); k-- > 0;) {
      if (locals[k] == n) return asType(applyRest(var(static_cast<std::uint32_t>(locals.size() - 1 - k))));
    }
    if (scope.notations) {
      auto it = scope.notations->find(n);
      if (it != scope.notations->end()) {
        const Notation& nt = it->second;
        if (notationDepth > 64) fail(ErrorKind::ElaborationAmbiguity, head, "notation " + n + " expands without end");
        auto given = take(nt.params.size(), "notation " + n);
        Elab inner = *this;
        inner.scope.locals = nt.params;
        inner.notationDepth = notationDepth + 1;
        TermP body = inner.run(nt.body, mode);
        std::vector<TermP> subst;
        for (std::size_t k = given.size(); k-- > 0;) subst.push_back(run(given[k], Mode::Term));
        body = collapseEl(substMany(body, subst));
        if (!args.empty() && mode == Mode::Type)
          fail(ErrorKind::ElaborationAmbiguity, head, "notation " + n + " is applied to too many arguments in type position");
        return applyRest(body);
      }
    }
    if (!scope.isGlobal || scope.isGlobal(n)) {
      if (arity(n) < 0 || (scope.isGlobal && scope.isGlobal(n))) return asType(applyRest(constant(n)));
    }
    int ar = arity(n);
    if (ar < 0) fail(ErrorKind::UnboundIdentifier, head, "unbound identifier " + n);

    if (ar == 0) {
      TermP t;
      if (n == "U") t = U();
      else if (n == "Size") t = size();
      else if (n == "Bool") t = mode == Mode::Type && args.empty() ? boolean() : boolCode();
      else if (n == "Top") t = mode == Mode::Type && args.empty() ? top() : topCode();
      else if (n == "Bot") t = mode == Mode::Type && args.empty() ? bot() : botCode();
      else if (n == "tt") t = tt();
      else if (n == "ff") t = ff();
      else t = star();
      bool large = n == "U" || n == "Size" || n == "Bool" || n == "Top" || n == "Bot";
      if (mode == Mode::Type && args.empty()) {
        if (large) return t;
        ambiguous(head);
      }
      return asType(applyRest(t));
    }
    auto given = take(static_cast<std::size_t>(ar), n);
    if (n == "Id") {
      bool typeLevel = mode == Mode::Type && args.empty();
      TermP A = run(given[0], typeLevel ? Mode::Type : Mode::Term);
      TermP t = typeLevel ? id(A, run(given[1], Mode::Term), run(given[2], Mode::Term))
                          : idCode(A, run(given[1], Mode::Term), run(given[2], Mode::Term));
      if (typeLevel) return t;
      return asType(applyRest(t));
    }
    TermP x = run(given[0], Mode::Term);
    if (n == "El") {
      TermP t = el(x);
      if (args.empty()) return t;
      return asType(applyRest(t));
    }
    if (n == "refl" && mode == Mode::Type && args.empty()) ambiguous(head);
    TermP t = n == "refl" ? refl(x) : n == "fst" ? proj1(x) : n == "snd" ? proj2(x) : n == "fix" ? fix(x) : fixBeta(x);
    return asType(applyRest(t));
  }
};

}  // namespace

TermP elaborate(const STermP& s, const Scope& scope, Mode mode) {
  Elab e{scope};
  return e.run(s, mode);
}

ElabDecl elaborateDecl(const SurfaceDecl& d, const Scope& scope) {
  ElabDecl out;
  out.kind = d.kind == SDeclKind::Axiom ? DeclKind::Axiom : DeclKind::Def;
  out.name = d.name;
  Scope sc = scope;
  for (const auto& b : d.binders) {
    TermP ty = elaborate(b.type, sc, Mode::Type);
    for (std::size_t k = 0; k < b.names.size(); ++k) {
      out.binderTypes.push_back(weaken(ty, 0, static_cast<std::uint32_t>(k)));
      out.binderNames.push_back(b.names[k]);
    }
    for (const auto& n : b.names) sc.locals.push_back(n);
  }
  TermP ty = d.type ? elaborate(d.type, sc, Mode::Type) : nullptr;
  if (d.body) out.innerBody = elaborate(d.body, sc, Mode::Term);
  if (ty) {
    for (std::size_t k = out.binderTypes.size(); k-- > 0;) ty = mk::pi(out.binderTypes[k], ty);
    out.type = ty;
  }
  if (out.innerBody) {
    TermP body = out.innerBody;
    for (std::size_t k = 0; k < out.binderTypes.size(); ++k) body = mk::lam(body);
    out.body = body;
  }
  return out;
}

Notation makeNotation(const SurfaceDecl& d) {
  Notation n;
  for (const auto& b : d.binders)
    for (const auto& x : b.names) n.params.push_back(x);
  n.body = d.body;
  return n;
}

}  // namespace smltt
