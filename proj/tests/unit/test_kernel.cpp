#include "doctest.h"

#include "core/term.hpp"
#include "gen.hpp"
#include "kernel/kernel.hpp"

using namespace smltt;
using namespace smltt::mk;

namespace {

ErrorKind errorOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const SmlttError& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::IoError;
}

V evalClosed(Kernel& k, const TermP& t) { return eval(k.emptyCtx().env, t); }

}  // namespace

TEST_CASE("infer le0 0") {
  Kernel k;
  Ctx c = k.emptyCtx();
  V ty = k.infer(c, app(constant("le0"), sz0()));
  CHECK(conv(0, ty, evalClosed(k, el(leq(sz0(), sz0())))));
}

TEST_CASE("existential package against its code") {
  Kernel k;
  Ctx c = k.emptyCtx();
  k.check(c, exPair(sz0(), tt()), evalClosed(k, el(exists(boolCode()))));
  V ty = k.infer(c, ann(exPair(sz0(), tt()), el(exists(boolCode()))));
  CHECK(conv(0, ty, evalClosed(k, el(exists(boolCode())))));
}

TEST_CASE("ind_Ex with a large motive is a smallness violation") {
  Kernel k;
  Ctx c = k.emptyCtx();
  TermP e = ann(exPair(sz0(), tt()), el(exists(boolCode())));
  TermP bad = exInd(pi(U(), U()), star(), e);
  CHECK(errorOf([&] { k.infer(c, bad); }) == ErrorKind::SmallnessViolation);
  try {
    k.infer(c, bad);
  } catch (const SmlttError& err) {
    CHECK(std::string(err.what()).find("motive of ind_Ex") != std::string::npos);
  }
}

TEST_CASE("fix against a constant family") {
  Kernel k;
  Ctx c = k.emptyCtx();
  TermP f = lam(lam(star()));
  k.check(c, fix(f), evalClosed(k, pi(size(), top())));
  // fixb: Id(Top, fix f i, f i (...)) where the right side reduces to star
  k.check(c, fixBeta(f), evalClosed(k, pi(size(), id(top(), app(fix(weaken(f, 0, 1)), var(0)), star()))));
  CHECK(errorOf([&] { k.check(c, fix(f), evalClosed(k, boolean())); }) == ErrorKind::FixShapeMismatch);
  CHECK(errorOf([&] { k.check(c, fix(f), evalClosed(k, pi(boolean(), top()))); }) == ErrorKind::FixShapeMismatch);
}

TEST_CASE("fix and fixb are inferable from an annotated step") {
  Kernel k;
  Ctx c = k.emptyCtx();
  // step : (i : Size) -> ((j : Size) -> El(^j <= i) -> Bool) -> Bool
  TermP stepTy = pi(size(), pi(pi(size(), pi(el(leq(szSuc(var(0)), var(1))), boolean())), boolean()));
  TermP step = ann(lam(lam(tt())), stepTy);
  V ty = k.infer(c, fix(step));
  CHECK(conv(0, ty, evalClosed(k, pi(size(), boolean()))));
  k.infer(c, fixBeta(step));
}

TEST_CASE("lambda against Bool") {
  Kernel k;
  CHECK(errorOf([&] { k.check(k.emptyCtx(), lam(var(0)), evalClosed(k, boolean())); }) == ErrorKind::TypeMismatch);
}

TEST_CASE("checkDecl examples") {
  Kernel k;
  k.checkDecl({"id", pi(U(), pi(el(var(0)), el(var(1)))), lam(lam(var(0))), DeclKind::Def}, false);
  CHECK(k.globals().find("id") != nullptr);
  CHECK(errorOf([&] { k.checkDecl({"bad", bot(), nullptr, DeclKind::Axiom}, false); }) ==
        ErrorKind::AxiomOutsidePrelude);
  k.checkDecl({"two", size(), szSuc(szSuc(sz0())), DeclKind::Def}, false);
  CHECK(errorOf([&] { k.checkDecl({"two", size(), sz0(), DeclKind::Def}, false); }) == ErrorKind::DuplicateName);
  k.checkDecl({"ok", bot(), nullptr, DeclKind::Axiom}, true);
}

TEST_CASE("usedAxioms") {
  Kernel k;
  k.checkDecl({"z", el(leq(sz0(), sz0())), app(constant("le0"), sz0()), DeclKind::Def}, false);
  CHECK(k.usedAxioms("z").empty());
  k.checkDecl({"ax", bot(), nullptr, DeclKind::Axiom}, true);
  k.checkDecl({"useAx", top(), botInd(top(), constant("ax")), DeclKind::Def}, false);
  CHECK(k.usedAxioms("useAx") == std::set<std::string>{"ax"});
  CHECK(errorOf([&] { k.usedAxioms("nope"); }) == ErrorKind::UnknownName);
}

TEST_CASE("error kinds") {
  Kernel k;
  Ctx c = k.emptyCtx();
  CHECK(errorOf([&] { k.infer(c, var(0)); }) == ErrorKind::UnboundVariable);
  CHECK(errorOf([&] { k.infer(c, app(tt(), tt())); }) == ErrorKind::NotAFunction);
  CHECK(errorOf([&] { k.checkType(c, tt()); }) == ErrorKind::ExpectedUniverse);
  CHECK(errorOf([&] { k.infer(c, lam(var(0))); }) == ErrorKind::CannotInfer);
  CHECK(errorOf([&] { k.infer(c, constant("nope")); }) == ErrorKind::UnknownName);
  CHECK(errorOf([&] { k.infer(c, exists(U())); }) == ErrorKind::SmallnessViolation);
  CHECK(errorOf([&] { k.infer(c, forall(pi(boolean(), boolean()))); }) == ErrorKind::SmallnessViolation);
  CHECK(errorOf([&] { k.check(c, size(), val::U()); }) == ErrorKind::SmallnessViolation);
  CHECK(errorOf([&] { k.infer(c, piCode(el(boolCode()), boolCode())); }) == ErrorKind::SmallnessViolation);
}

TEST_CASE("funext has the isEquiv type at every Pi type") {
  Kernel k;
  Ctx c = k.emptyCtx();
  // at a large domain: Pi over Size
  TermP fTy = pi(size(), boolean());
  Ctx c2 = c.bind("f", evalClosed(k, fTy));
  c2 = c2.bind("g", evalClosed(k, fTy));
  V ty = k.infer(c2, app(app(constant("funext"), var(1)), var(0)));
  V forced = force(ty);
  CHECK(forced->tag == VTag::Sigma);
  CHECK(errorOf([&] { k.infer(c, constant("funext")); }) == ErrorKind::CannotInfer);
}

TEST_CASE("property: inferred types check back") {
  Kernel k;
  test::TypedGen g(31);
  for (int n = 0; n < 200; ++n) {
    std::vector<test::TypedGen::Local> ctx;
    TermP ty = g.type(2);
    TermP t = g.term(ctx, ty, 4);
    Ctx c = k.emptyCtx();
    k.checkType(c, ty);
    V tv = evalClosed(k, ty);
    k.check(c, t, tv);
    TermP a = ann(t, ty);
    V inferred = k.infer(c, a);
    k.check(c, a, inferred);
    TermP nf = readback(0, evalClosed(k, t));
    k.check(c, nf, tv);
  }
}

TEST_CASE("leq proofs are propositional") {
  Kernel k;
  Ctx c = k.emptyCtx();
  // leeq 0 0 p q : Id (El(0 <= 0)) p q
  TermP p = app(constant("le0"), sz0());
  TermP q = app(constant("lerefl"), sz0());
  TermP t = app(app(app(app(constant("leeq"), sz0()), sz0()), p), q);
  V ty = k.infer(c, t);
  CHECK(force(ty)->tag == VTag::Id);
}
