#include "doctest.h"

#include "core/term.hpp"
#include "gen.hpp"

using namespace smltt;
using namespace smltt::mk;

TEST_CASE("weaken examples") {
  CHECK(alphaEq(weaken(var(0), 0, 1), var(1)));
  CHECK(alphaEq(weaken(lam(var(0)), 0, 5), lam(var(0))));
  CHECK(alphaEq(weaken(lam(app(var(0), var(1))), 0, 2), lam(app(var(0), var(3)))));
}

TEST_CASE("substTop examples") {
  CHECK(alphaEq(substTop(var(0), tt()), tt()));
  CHECK(alphaEq(substTop(lam(var(1)), tt()), lam(tt())));
  CHECK(alphaEq(substTop(app(var(0), var(1)), star()), app(star(), var(0))));
}

TEST_CASE("alphaEq examples") {
  CHECK(alphaEq(lam(var(0)), lam(var(0))));
  CHECK_FALSE(alphaEq(sz0(), szSuc(sz0())));
  CHECK(alphaEq(exPair(sz0(), tt()), exPair(sz0(), tt())));
}

TEST_CASE("binders of J and ind_Ex") {
  // J's motive binds three variables, the base one
  TermP t = J(var(3), var(1), var(0), var(0), var(0));
  TermP w = weaken(t, 0, 1);
  CHECK(alphaEq(w, J(var(4), var(2), var(1), var(1), var(1))));
  TermP e = exInd(var(1), var(2), var(0));
  CHECK(alphaEq(weaken(e, 0, 1), exInd(var(2), var(3), var(1))));
  CHECK(wellScoped(J(var(2), var(0), sz0(), sz0(), sz0()), 0));
  CHECK_FALSE(wellScoped(J(var(3), var(0), sz0(), sz0(), sz0()), 0));
}

TEST_CASE("size literals") {
  CHECK(alphaEq(sizeLit(2), szSuc(szSuc(sz0()))));
  CHECK(alphaEq(sizeLit(0), sz0()));
}

TEST_CASE("property: substitution cancels weakening") {
  test::Rng rng(11);
  for (int n = 0; n < 500; ++n) {
    std::uint32_t depth = rng.below(4);
    TermP t = test::randomRaw(rng, depth, 4);
    TermP s = test::randomRaw(rng, depth, 2);
    REQUIRE(wellScoped(t, depth));
    CHECK(alphaEq(substTop(weaken(t, 0, 1), s), t));
  }
}

TEST_CASE("property: weakening composes") {
  test::Rng rng(12);
  for (int n = 0; n < 500; ++n) {
    std::uint32_t depth = rng.below(4);
    TermP t = test::randomRaw(rng, depth, 4);
    std::uint32_t a = rng.below(3), b = rng.below(3);
    CHECK(alphaEq(weaken(weaken(t, 0, a), 0, b), weaken(t, 0, a + b)));
    CHECK(wellScoped(weaken(t, 0, a), depth + a));
  }
}

TEST_CASE("property: alphaEq is an equivalence") {
  test::Rng rng(13);
  for (int n = 0; n < 300; ++n) {
    TermP a = test::randomRaw(rng, 2, 3);
    TermP b = test::randomRaw(rng, 2, 3);
    TermP a2 = weaken(a, 5, 1);  // no free index reaches 5: a copy
    CHECK(alphaEq(a, a));
    CHECK(alphaEq(a, a2));
    CHECK(alphaEq(a, b) == alphaEq(b, a));
    if (alphaEq(a, b)) CHECK(alphaEq(a2, b));
  }
}
