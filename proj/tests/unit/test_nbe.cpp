#include "doctest.h"

#include "core/term.hpp"
#include "gen.hpp"
#include "kernel/kernel.hpp"
#include "nbe/nbe.hpp"

using namespace smltt;
using namespace smltt::mk;

namespace {

Env emptyEnv(const Kernel& k) {
  Env e;
  e.globals = &k.globals();
  return e;
}

}  // namespace

TEST_CASE("eval: beta") {
  Kernel k;
  V v = eval(emptyEnv(k), app(lam(var(0)), tt()));
  CHECK(v->tag == VTag::Tt);
}

TEST_CASE("eval: El of a Pi code computes to a Pi type") {
  Kernel k;
  V v = eval(emptyEnv(k), el(piCode(boolCode(), topCode())));
  REQUIRE(v->tag == VTag::Pi);
  CHECK(v->vs[0]->tag == VTag::Bool);
  CHECK(v->clo.apply(val::var(0))->tag == VTag::Top);
}

TEST_CASE("eval: fix stays neutral") {
  Kernel k;
  TermP f = lam(lam(star()));
  V v = eval(emptyEnv(k), app(fix(f), sz0()));
  REQUIRE(v->tag == VTag::Neutral);
  CHECK(v->head.kind == HeadKind::Fix);
  REQUIRE(v->spine.size() == 1);
  CHECK(v->spine[0].kind == FrameKind::App);
  CHECK(v->spine[0].a->tag == VTag::Sz0);
  // and the readback keeps Fix at the head for closed sizes
  for (unsigned n = 0; n < 5; ++n) {
    TermP t = readback(0, eval(emptyEnv(k), app(fix(f), sizeLit(n))));
    CHECK(alphaEq(t, app(fix(f), sizeLit(n))));
  }
}

TEST_CASE("readback examples") {
  Kernel k;
  CHECK(alphaEq(readback(0, val::make(VTag::Tt)), tt()));
  CHECK(alphaEq(readback(0, eval(emptyEnv(k), lam(app(lam(var(0)), var(0))))), lam(var(0))));
  V n = vApp(val::var(0), val::make(VTag::Star));
  CHECK(alphaEq(readback(1, n), app(var(0), star())));
}

TEST_CASE("convert: eta for Pi") {
  Kernel k;
  // f : Bool -> Bool as a variable at level 0
  Env env = emptyEnv(k).extend(val::var(0));
  V ty = eval(env, pi(boolean(), boolean()));
  V etaF = eval(env, lam(app(var(1), var(0))));
  V f = eval(env, var(0));
  CHECK(convert(1, etaF, f, ty));
  CHECK(convert(1, f, etaF, ty));
}

TEST_CASE("convert: distinct sizes") {
  CHECK_FALSE(convert(0, val::make(VTag::SzSuc, {val::make(VTag::Sz0)}), val::make(VTag::Sz0), val::size()));
}

TEST_CASE("convert: eta for Sigma") {
  Kernel k;
  Env env = emptyEnv(k).extend(val::var(0));
  V ty = eval(env, sigma(boolean(), top()));
  V c = eval(env, var(0));
  V p = eval(env, pair(proj1(var(0)), proj2(var(0))));
  CHECK(convert(1, p, c, ty));
  CHECK(convert(1, c, p, ty));
}

TEST_CASE("convert: eta for forall") {
  Kernel k;
  Env env = emptyEnv(k).extend(val::var(0));
  V ty = eval(env, el(forall(boolCode())));
  V f = eval(env, var(0));
  V e = eval(env, forLam(forApp(var(1), var(0))));
  CHECK(convert(1, e, f, ty));
}

TEST_CASE("El of the remaining codes and of neutrals") {
  Kernel k;
  Env e = emptyEnv(k);
  CHECK(eval(e, el(botCode()))->tag == VTag::Bot);
  CHECK(eval(e, el(topCode()))->tag == VTag::Top);
  CHECK(eval(e, el(boolCode()))->tag == VTag::Bool);
  CHECK(eval(e, el(sigCode(boolCode(), topCode())))->tag == VTag::Sigma);
  CHECK(eval(e, el(idCode(boolCode(), tt(), tt())))->tag == VTag::Id);
  CHECK(eval(e, el(leq(sz0(), sz0())))->tag == VTag::El);
  CHECK(eval(e, el(exists(boolCode())))->tag == VTag::El);
  CHECK(eval(e, el(forall(boolCode())))->tag == VTag::El);
  V n = eval(e.extend(val::var(0)), el(var(0)));
  REQUIRE(n->tag == VTag::Neutral);
  CHECK(n->spine.back().kind == FrameKind::El);
}

TEST_CASE("eliminators compute on constructors") {
  Kernel k;
  Env e = emptyEnv(k);
  CHECK(eval(e, exInd(boolCode(), var(0), exPair(sz0(), tt())))->tag == VTag::Tt);
  CHECK(eval(e, forApp(forLam(var(0)), sz0()))->tag == VTag::Sz0);
  CHECK(eval(e, boolInd(boolean(), ff(), tt(), tt()))->tag == VTag::Ff);
  CHECK(eval(e, topInd(boolean(), tt(), star()))->tag == VTag::Tt);
  CHECK(eval(e, J(boolean(), var(0), tt(), tt(), refl(tt())))->tag == VTag::Tt);
  CHECK(eval(e, proj2(pair(tt(), ff())))->tag == VTag::Ff);
}

TEST_CASE("property: readback is idempotent on generated terms") {
  Kernel k;
  test::TypedGen g(21);
  for (int n = 0; n < 200; ++n) {
    std::vector<test::TypedGen::Local> ctx;
    TermP ty = g.type(2);
    TermP t = g.term(ctx, ty, 4);
    TermP nf = readback(0, eval(emptyEnv(k), t));
    TermP nf2 = readback(0, eval(emptyEnv(k), nf));
    CHECK(alphaEq(nf, nf2));
  }
}
