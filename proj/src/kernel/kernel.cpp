#include "kernel/kernel.hpp"

#include "frontend/printer.hpp"

namespace smltt {

Ctx Ctx::bind(const std::string& name, V ty) const {
  Ctx c = *this;
  c.env = env.extend(val::var(depth()));
  c.types.push_back(std::move(ty));
  c.names.push_back(name);
  return c;
}

bool isSizeOrderConstant(const std::string& n) {
  return n == "le0" || n == "lesuc" || n == "lerefl" || n == "letrans" || n == "leeq";
}

namespace {

using namespace mk;

Closure c1(std::function<V(const V&)> f) {
  return nativeClosure(1, [f](const std::vector<V>& a) { return f(a[0]); });
}

Closure c3(std::function<V(const V&, const V&, const V&)> f) {
  return nativeClosure(3, [f](const std::vector<V>& a) { return f(a[0], a[1], a[2]); });
}

V lamV(std::function<V(const V&)> f) { return val::withClosure(VTag::Lam, {}, c1(std::move(f))); }

V leqV(const V& i, const V& j) { return val::make(VTag::LeqCode, {i, j}); }
V sucV(const V& i) { return val::make(VTag::SzSuc, {i}); }
V reflV(const V& a) { return val::make(VTag::Refl, {a}); }

V fixV(const V& f) {
  auto v = std::make_shared<Value>();
  v->tag = VTag::Neutral;
  v->head.kind = HeadKind::Fix;
  v->head.arg = f;
  return v;
}

bool isLargeFormer(Tag t) {
  switch (t) {
    case Tag::U:
    case Tag::El:
    case Tag::Pi:
    case Tag::Sigma:
    case Tag::Id:
    case Tag::Bot:
    case Tag::Top:
    case Tag::Bool:
    case Tag::Size:
      return true;
    default:
      return false;
  }
}

[[noreturn]] void fail(ErrorKind k, const std::string& msg) { throw SmlttError(k, msg); }

}  // namespace

V apValue(const V& B, const V& f, const V& x, const V& y, const V& p) {
  return vJ(c3([B, f](const V& u, const V& v, const V&) { return val::id(B, vApp(f, u), vApp(f, v)); }),
            c1([f](const V& u) { return reflV(vApp(f, u)); }), x, y, p);
}

V isEquivValue(const V& A, const V& B, const V& f) {
  return val::sigma(val::arrow(B, A), c1([A, B, f](const V& g) {
    V etaTy = val::pi(A, c1([A, f, g](const V& x) { return val::id(A, vApp(g, vApp(f, x)), x); }));
    return val::sigma(etaTy, c1([A, B, f, g](const V& eta) {
      V epsTy = val::pi(B, c1([B, f, g](const V& y) { return val::id(B, vApp(f, vApp(g, y)), y); }));
      return val::sigma(epsTy, c1([A, B, f, g, eta](const V& eps) {
        return val::pi(A, c1([B, f, g, eta, eps](const V& x) {
          V fx = vApp(f, x);
          V gfx = vApp(g, fx);
          V fgfx = vApp(f, gfx);
          return val::id(val::id(B, fgfx, fx), apValue(B, f, gfx, x, vApp(eta, x)), vApp(eps, fx));
        }));
      }));
    }));
  }));
}

V fixFunctionType(const Closure& C) {
  return val::pi(val::size(), c1([C](const V& i) {
    V rec = val::pi(val::size(), c1([C, i](const V& j) { return val::arrow(vEl(leqV(sucV(j), i)), C.apply(j)); }));
    return val::arrow(rec, C.apply(i));
  }));
}

V fixBetaType(const Closure& C, const V& f) {
  V fx = fixV(f);
  return val::pi(val::size(), c1([C, f, fx](const V& i) {
    V rec = lamV([fx](const V& j) { return lamV([fx, j](const V&) { return vApp(fx, j); }); });
    return val::id(C.apply(i), vApp(fx, i), vApp(vApp(f, i), rec));
  }));
}

Kernel::Kernel() {
  auto prim = [&](const std::string& name, TermP ty, bool axiom) {
    auto e = std::make_shared<GlobalEntry>();
    e->name = name;
    e->typeTerm = ty;
    e->isPrimitive = true;
    e->isAxiom = axiom;
    e->origin = "kernel";
    if (ty) {
      Env env;
      env.globals = &globals_;
      e->type = eval(env, ty);
    }
    globals_.add(e);
  };
  auto S = size();
  prim("le0", pi(S, el(leq(sz0(), var(0)))), false);
  prim("lesuc", pi(S, el(leq(var(0), szSuc(var(0))))), false);
  prim("lerefl", pi(S, el(leq(var(0), var(0)))), false);
  prim("letrans",
       pi(S, pi(S, pi(S, pi(el(leq(var(2), var(1))), pi(el(leq(var(2), var(1))), el(leq(var(4), var(2)))))))),
       false);
  prim("leeq", pi(S, pi(S, pi(el(leq(var(1), var(0))), pi(el(leq(var(2), var(1))), id(el(leq(var(3), var(2))), var(1), var(0)))))),
       false);
  prim(kFunext, nullptr, true);
}

Ctx Kernel::emptyCtx() const {
  Ctx c;
  c.env.globals = &globals_;
  return c;
}

std::string Kernel::show(const Ctx& ctx, const V& v, bool unfold) const {
  try {
    ReadbackOptions o;
    o.unfold = unfold;
    return printWith(readback(ctx.depth(), v, o), ctx.names, true);
  } catch (const std::exception&) {
    return "<unprintable>";
  }
}

std::string Kernel::showTerm(const Ctx& ctx, const TermP& t) const {
  try {
    return printWith(t, ctx.names, false);
  } catch (const std::exception&) {
    return "<unprintable>";
  }
}

void Kernel::mismatch(const Ctx& ctx, const TermP& t, const V& expected, const V& actual) {
  fail(ErrorKind::TypeMismatch, "term " + showTerm(ctx, t) + "\n  has type " + show(ctx, actual) +
                                    "\n  but is expected to have type " + show(ctx, expected));
}

V Kernel::funextType(const V& T, const V& f, const V& g) const {
  V A = T->vs[0];
  Closure B = T->clo;
  V happly = lamV([B, f, g](const V& p) {
    return lamV([B, f, g, p](const V& x) {
      return vJ(c3([B, x](const V& u, const V& v, const V&) { return val::id(B.apply(x), vApp(u, x), vApp(v, x)); }),
                c1([x](const V& u) { return reflV(vApp(u, x)); }), f, g, p);
    });
  });
  V X = val::id(T, f, g);
  V Y = val::pi(A, c1([B, f, g](const V& x) { return val::id(B.apply(x), vApp(f, x), vApp(g, x)); }));
  return isEquivValue(X, Y, happly);
}

void Kernel::checkSmall(const Ctx& ctx, const TermP& t, const char* where) {
  if (isLargeFormer(t->tag))
    fail(ErrorKind::SmallnessViolation,
         std::string(where) + " must be small (a term of U), but " + showTerm(ctx, t) + " is a large type");
  try {
    check(ctx, t, val::U());
  } catch (SmlttError& e) {
    // name the outer rule too
    if (e.kind() != ErrorKind::SmallnessViolation || e.diag.message.rfind(where, 0) == 0) throw;
    Diagnostic d = e.diag;
    d.message = std::string(where) + ": " + d.message;
    throw SmlttError(d);
  }
}

void Kernel::checkType(const Ctx& ctx, const TermP& t) {
  const auto& k = t->kids;
  switch (t->tag) {
    case Tag::U:
    case Tag::Size:
    case Tag::Bot:
    case Tag::Top:
    case Tag::Bool:
      return;
    case Tag::Pi:
    case Tag::Sigma:
      checkType(ctx, k[0]);
      checkType(ctx.bind("_", evalIn(ctx, k[0])), k[1]);
      return;
    case Tag::Id: {
      checkType(ctx, k[0]);
      V A = evalIn(ctx, k[0]);
      check(ctx, k[1], A);
      check(ctx, k[2], A);
      return;
    }
    case Tag::El: {
      V ty = force(infer(ctx, k[0]));
      if (ty->tag != VTag::U)
        fail(ErrorKind::ExpectedUniverse,
             "El expects a code in U, but " + showTerm(ctx, k[0]) + " has type " + show(ctx, ty));
      return;
    }
    default:
      fail(ErrorKind::ExpectedUniverse, "expected a type, found " + showTerm(ctx, t));
  }
}

V Kernel::inferFixFamily(const Ctx& ctx, const TermP& f, Closure& family) {
  V fty = force(infer(ctx, f));
  if (fty->tag != VTag::Pi || !conv(ctx.depth(), fty->vs[0], val::size()))
    fail(ErrorKind::FixShapeMismatch, "fixpoint argument must be a function over Size, but has type " + show(ctx, fty));
  V probe = force(fty->clo.apply(val::var(ctx.depth())));
  if (probe->tag != VTag::Pi)
    fail(ErrorKind::FixShapeMismatch, "fixpoint argument must take a recursive call, but has type " + show(ctx, fty));
  // The codomain does not depend on the recursive argument; a placeholder level
  // outside every context makes any such dependency fail the shape check below.
  V placeholder = val::var(0x3fffffff);
  Closure outer = fty->clo;
  family = c1([outer, placeholder](const V& i) { return force(outer.apply(i))->clo.apply(placeholder); });
  V expected = fixFunctionType(family);
  if (!conv(ctx.depth(), expected, fty))
    fail(ErrorKind::FixShapeMismatch, "fixpoint argument has type " + show(ctx, fty) +
                                          ", which is not of the form Π i:Size. (Π j:Size. El(↑j ≤ i) → C j) → C i");
  return fty;
}

V Kernel::infer(const Ctx& ctx, const TermP& t) {
  const auto& k = t->kids;
  const std::uint32_t d = ctx.depth();
  switch (t->tag) {
    case Tag::Var:
      if (t->index >= d) fail(ErrorKind::UnboundVariable, "variable index " + std::to_string(t->index) + " is unbound");
      return ctx.types[d - 1 - t->index];
    case Tag::Const: {
      auto g = globals_.find(t->name);
      if (!g) fail(ErrorKind::UnknownName, "unknown constant " + t->name);
      if (!g->type) fail(ErrorKind::CannotInfer, t->name + " must be applied to two functions of a common Π type");
      return g->type;
    }
    case Tag::App: {
      const TermP& fn = k[0];
      if (fn->tag == Tag::App && fn->kids[0]->tag == Tag::Const && fn->kids[0]->name == kFunext) {
        V T = force(infer(ctx, fn->kids[1]));
        if (T->tag != VTag::Pi)
          fail(ErrorKind::TypeMismatch, "funext expects functions of a Π type, got " + show(ctx, T));
        check(ctx, k[1], T);
        return funextType(T, evalIn(ctx, fn->kids[1]), evalIn(ctx, k[1]));
      }
      V fty = force(infer(ctx, fn));
      if (fty->tag != VTag::Pi)
        fail(ErrorKind::NotAFunction, showTerm(ctx, fn) + " is applied but has type " + show(ctx, fty));
      check(ctx, k[1], fty->vs[0]);
      return fty->clo.apply(evalIn(ctx, k[1]));
    }
    case Tag::ForApp: {
      V fty = force(infer(ctx, k[0]));
      if (fty->tag != VTag::El || fty->vs[0]->tag != VTag::ForallCode)
        fail(ErrorKind::NotAFunction,
             showTerm(ctx, k[0]) + " is applied to a size but has type " + show(ctx, fty));
      check(ctx, k[1], val::size());
      return vEl(fty->vs[0]->clo.apply(evalIn(ctx, k[1])));
    }
    case Tag::Proj1:
    case Tag::Proj2: {
      V pty = force(infer(ctx, k[0]));
      if (pty->tag != VTag::Sigma)
        fail(ErrorKind::TypeMismatch, "projection from " + showTerm(ctx, k[0]) + " of non-Σ type " + show(ctx, pty));
      if (t->tag == Tag::Proj1) return pty->vs[0];
      return pty->clo.apply(vProj1(evalIn(ctx, k[0])));
    }
    case Tag::Refl: {
      V A = infer(ctx, k[0]);
      V a = evalIn(ctx, k[0]);
      return val::id(A, a, a);
    }
    case Tag::J: {
      V A = infer(ctx, k[2]);
      check(ctx, k[3], A);
      V x = evalIn(ctx, k[2]);
      V y = evalIn(ctx, k[3]);
      check(ctx, k[4], val::id(A, x, y));
      Ctx mctx = ctx.bind("x", A);
      mctx = mctx.bind("y", A);
      mctx = mctx.bind("p", val::id(A, val::var(d), val::var(d + 1)));
      checkType(mctx, k[0]);
      Closure M{ctx.env, k[0], nullptr, 3};
      V z = val::var(d);
      check(ctx.bind("x", A), k[1], M.apply({z, z, reflV(z)}));
      return M.apply({x, y, evalIn(ctx, k[4])});
    }
    case Tag::BotInd: {
      check(ctx, k[1], val::bot());
      checkType(ctx.bind("z", val::bot()), k[0]);
      return Closure{ctx.env, k[0], nullptr, 1}.apply(evalIn(ctx, k[1]));
    }
    case Tag::TopInd: {
      check(ctx, k[2], val::top());
      checkType(ctx.bind("z", val::top()), k[0]);
      Closure M{ctx.env, k[0], nullptr, 1};
      check(ctx, k[1], M.apply(val::make(VTag::Star)));
      return M.apply(evalIn(ctx, k[2]));
    }
    case Tag::BoolInd: {
      check(ctx, k[3], val::boolean());
      checkType(ctx.bind("z", val::boolean()), k[0]);
      Closure M{ctx.env, k[0], nullptr, 1};
      check(ctx, k[1], M.apply(val::make(VTag::Tt)));
      check(ctx, k[2], M.apply(val::make(VTag::Ff)));
      return M.apply(evalIn(ctx, k[3]));
    }
    case Tag::Star: return val::top();
    case Tag::Tt:
    case Tag::Ff: return val::boolean();
    case Tag::Sz0: return val::size();
    case Tag::SzSuc:
      check(ctx, k[0], val::size());
      return val::size();
    case Tag::LeqCode:
      check(ctx, k[0], val::size());
      check(ctx, k[1], val::size());
      return val::U();
    case Tag::BotCode:
    case Tag::TopCode:
    case Tag::BoolCode:
      return val::U();
    case Tag::PiCode:
    case Tag::SigCode: {
      checkSmall(ctx, k[0], t->tag == Tag::PiCode ? "domain of a Π code" : "first component of a Σ code");
      checkSmall(ctx.bind("x", vEl(evalIn(ctx, k[0]))), k[1],
                 t->tag == Tag::PiCode ? "codomain of a Π code" : "second component of a Σ code");
      return val::U();
    }
    case Tag::IdCode: {
      checkSmall(ctx, k[0], "carrier of an identity code");
      V A = vEl(evalIn(ctx, k[0]));
      check(ctx, k[1], A);
      check(ctx, k[2], A);
      return val::U();
    }
    case Tag::ExistsCode:
      checkSmall(ctx.bind("i", val::size()), k[0], "body of ∃");
      return val::U();
    case Tag::ForallCode:
      checkSmall(ctx.bind("i", val::size()), k[0], "body of ∀");
      return val::U();
    case Tag::ExInd: {
      V ety = force(infer(ctx, k[2]));
      if (ety->tag != VTag::El || ety->vs[0]->tag != VTag::ExistsCode)
        fail(ErrorKind::TypeMismatch, "ind_Ex eliminates an existential, but " + showTerm(ctx, k[2]) +
                                          " has type " + show(ctx, ety));
      checkSmall(ctx.bind("z", ety), k[0], "motive of ind_Ex");
      Closure M{ctx.env, k[0], nullptr, 1};
      Closure body = ety->vs[0]->clo;
      V i = val::var(d);
      V x = val::var(d + 1);
      Ctx bctx = ctx.bind("i", val::size());
      bctx = bctx.bind("x", vEl(body.apply(i)));
      check(bctx, k[1], vEl(M.apply(val::make(VTag::ExPair, {i, x}))));
      return vEl(M.apply(evalIn(ctx, k[2])));
    }
    case Tag::Fix: {
      Closure C;
      inferFixFamily(ctx, k[0], C);
      return val::pi(val::size(), C);
    }
    case Tag::FixBeta: {
      Closure C;
      inferFixFamily(ctx, k[0], C);
      return fixBetaType(C, evalIn(ctx, k[0]));
    }
    case Tag::Ann: {
      checkType(ctx, k[1]);
      V A = evalIn(ctx, k[1]);
      check(ctx, k[0], A);
      return A;
    }
    case Tag::Lam:
    case Tag::Pair:
    case Tag::ForLam:
    case Tag::ExPair:
      fail(ErrorKind::CannotInfer, "cannot infer the type of " + showTerm(ctx, t) + "; add a type annotation");
    default:
      fail(ErrorKind::TypeMismatch, showTerm(ctx, t) + " is a type, not a term");
  }
}

void Kernel::check(const Ctx& ctx, const TermP& t, const V& ty0) {
  const auto& k = t->kids;
  const std::uint32_t d = ctx.depth();
  V ty = force(ty0);
  switch (t->tag) {
    case Tag::Lam:
      if (ty->tag != VTag::Pi) fail(ErrorKind::TypeMismatch, "λ-abstraction checked against non-function type " + show(ctx, ty));
      check(ctx.bind("x", ty->vs[0]), k[0], ty->clo.apply(val::var(d)));
      return;
    case Tag::Pair: {
      if (ty->tag != VTag::Sigma) fail(ErrorKind::TypeMismatch, "pair checked against non-Σ type " + show(ctx, ty));
      check(ctx, k[0], ty->vs[0]);
      check(ctx, k[1], ty->clo.apply(evalIn(ctx, k[0])));
      return;
    }
    case Tag::ForLam:
      if (ty->tag != VTag::El || ty->vs[0]->tag != VTag::ForallCode)
        fail(ErrorKind::TypeMismatch, "∀-abstraction checked against type " + show(ctx, ty));
      check(ctx.bind("i", val::size()), k[0], vEl(ty->vs[0]->clo.apply(val::var(d))));
      return;
    case Tag::ExPair:
      if (ty->tag != VTag::El || ty->vs[0]->tag != VTag::ExistsCode)
        fail(ErrorKind::TypeMismatch, "∃-package checked against type " + show(ctx, ty));
      check(ctx, k[0], val::size());
      check(ctx, k[1], vEl(ty->vs[0]->clo.apply(evalIn(ctx, k[0]))));
      return;
    case Tag::Refl: {
      if (ty->tag != VTag::Id) break;
      check(ctx, k[0], ty->vs[0]);
      V a = evalIn(ctx, k[0]);
      if (!convert(d, a, ty->vs[1], ty->vs[0]) || !convert(d, a, ty->vs[2], ty->vs[0]))
        fail(ErrorKind::TypeMismatch, "refl " + showTerm(ctx, k[0]) + " does not prove " + show(ctx, ty));
      return;
    }
    case Tag::Fix: {
      if (ty->tag != VTag::Pi || !conv(d, ty->vs[0], val::size()))
        fail(ErrorKind::FixShapeMismatch, "fix checked against " + show(ctx, ty) + ", which is not a Π over Size");
      check(ctx, k[0], fixFunctionType(ty->clo));
      return;
    }
    case Tag::FixBeta: {
      if (ty->tag != VTag::Pi || !conv(d, ty->vs[0], val::size()))
        fail(ErrorKind::FixShapeMismatch, "fixb checked against " + show(ctx, ty) + ", which is not a Π over Size");
      V probe = force(ty->clo.apply(val::var(d)));
      if (probe->tag != VTag::Id)
        fail(ErrorKind::FixShapeMismatch, "fixb checked against " + show(ctx, ty) + ", which is not a family of identities");
      Closure outer = ty->clo;
      Closure C = c1([outer](const V& i) { return force(outer.apply(i))->vs[0]; });
      check(ctx, k[0], fixFunctionType(C));
      V expected = fixBetaType(C, evalIn(ctx, k[0]));
      if (!conv(d, expected, ty)) mismatch(ctx, t, ty, expected);
      return;
    }
    default:
      break;
  }
  if (ty->tag == VTag::U && isLargeFormer(t->tag))
    fail(ErrorKind::SmallnessViolation, "expected a small type (a term of U), but " + showTerm(ctx, t) + " is a large type");
  V actual = infer(ctx, t);
  if (!conv(d, actual, ty)) mismatch(ctx, t, ty, actual);
}

void Kernel::checkDecl(const TopLevelDecl& decl, bool trusted, const std::string& origin) {
  if (globals_.find(decl.name)) fail(ErrorKind::DuplicateName, "duplicate declaration of " + decl.name);
  if (decl.kind == DeclKind::Axiom && !trusted)
    fail(ErrorKind::AxiomOutsidePrelude, "axiom " + decl.name + " is only permitted in the trusted prelude");
  Ctx ctx = emptyCtx();
  checkType(ctx, decl.declaredType);
  V ty = evalIn(ctx, decl.declaredType);
  if (decl.body) check(ctx, decl.body, ty);
  auto e = std::make_shared<GlobalEntry>();
  e->name = decl.name;
  e->typeTerm = decl.declaredType;
  e->body = decl.kind == DeclKind::Def ? decl.body : nullptr;
  e->type = ty;
  e->isAxiom = decl.kind == DeclKind::Axiom;
  e->origin = origin;
  globals_.add(e);
}

std::set<std::string> Kernel::usedAxioms(const std::string& name) {
  auto cached = axiomCache_.find(name);
  if (cached != axiomCache_.end()) return cached->second;
  auto g = globals_.find(name);
  if (!g) fail(ErrorKind::UnknownName, "unknown name " + name);
  std::set<std::string> out;
  if (g->isAxiom) out.insert(name);
  std::vector<std::string> refs;
  if (g->typeTerm) collectConsts(g->typeTerm, refs);
  if (g->body) collectConsts(g->body, refs);
  for (const auto& r : refs) {
    if (r == name) continue;
    auto sub = usedAxioms(r);
    out.insert(sub.begin(), sub.end());
  }
  axiomCache_[name] = out;
  return out;
}

std::vector<std::string> Kernel::axiomNames() const {
  std::vector<std::string> out;
  for (const auto& n : globals_.order()) {
    auto g = globals_.find(n);
    if (g && g->isAxiom) out.push_back(n);
  }
  return out;
}

}  // namespace smltt
