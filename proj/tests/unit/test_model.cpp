#include "doctest.h"

#include "core/error.hpp"
#include "gen.hpp"
#include "model/assembly.hpp"
#include "model/pca.hpp"
#include "model/vectors.hpp"

using namespace smltt;
using namespace smltt::model;
using namespace smltt::model::cl;

namespace {

ClP whnf(const ClP& t, std::uint64_t fuel = 10) {
  auto r = reduce(t, fuel);
  REQUIRE_FALSE(r.diverged());
  return *r.value;
}

FiniteAssembly tokens(std::vector<std::string> carrier, std::vector<std::pair<std::string, int>> rel) {
  FiniteAssembly a;
  a.carrier = std::move(carrier);
  for (auto& [r, x] : rel) a.realises.emplace_back(atom(r), x);
  return a;
}

}  // namespace

TEST_CASE("reduce examples") {
  ClP a = atom("a"), b = atom("b");
  CHECK(clEqual(whnf(apps(K(), {a, b})), a));
  CHECK(clEqual(whnf(apps(S(), {K(), K(), a})), a));
  CHECK(clEqual(whnf(app(Pr1(), apps(Pr(), {a, b}))), a));
  CHECK(clEqual(whnf(app(Pr2(), apps(Pr(), {a, b}))), b));
  CHECK(reduce(apps(K(), {a, b}), 0).diverged());
  // S I I (S I I) never stops
  ClP omega = app(apps(S(), {I(), I()}), apps(S(), {I(), I()}));
  CHECK(reduce(omega, 1000).diverged());
}

TEST_CASE("bracket examples") {
  ClP a = atom("a");
  CHECK(clEqual(whnf(app(bracket("x", var("x")), K())), K()));
  CHECK(clEqual(whnf(app(bracket("x", K()), a)), K()));
  ClP pr = bracket("x", apps(Pr(), {var("x"), var("x")}));
  CHECK(kleeneEqual(app(pr, S()), apps(Pr(), {S(), S()}), 100));
}

TEST_CASE("property: bracket behaves as substitution") {
  test::Rng rng(5);
  std::vector<ClP> leaves{S(), K(), Pr(), Pr1(), Pr2(), atom("c"), var("x")};
  std::function<ClP(int)> gen = [&](int n) -> ClP {
    if (n <= 1 || rng.coin()) return leaves[rng.below(static_cast<std::uint32_t>(leaves.size()))];
    int l = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(n - 1)));
    return app(gen(l), gen(n - l));
  };
  std::function<ClP(const ClP&, const ClP&)> subst = [&](const ClP& t, const ClP& v) -> ClP {
    if (t->kind == ClKind::Var) return v;
    if (t->kind == ClKind::App) return app(subst(t->f, v), subst(t->a, v));
    return t;
  };
  for (int k = 0; k < 300; ++k) {
    ClP body = gen(6);
    ClP arg = leaves[rng.below(6)];
    CHECK(kleeneEqual(app(bracket("x", body), arg), subst(body, arg), 2000));
  }
}

TEST_CASE("fix law examples") {
  ClP a = atom("a");
  CHECK(checkFixLaw(app(K(), I()), a, 10000));
  CHECK(clEqual(whnf(apps(pcaFix(), {app(K(), I()), a}), 10000), a));
  CHECK(checkFixLaw(K(), a, 10000));
  CHECK(checkFixLaw(K(), a, 0));
  // fix f is always defined
  CHECK_FALSE(reduce(app(pcaFix(), I()), 1000).diverged());
  CHECK_FALSE(reduce(app(pcaFix(), atom("f")), 1000).diverged());
}

TEST_CASE("fix law is monotone in fuel") {
  ClP a = atom("a");
  for (ClP f : {app(K(), I()), K(), S(), app(S(), K()), Pr(), app(K(), K())}) {
    bool seen = false;
    for (std::uint64_t fuel : {50u, 200u, 1000u, 10000u}) {
      bool ok = checkFixLaw(f, a, fuel);
      if (seen) CHECK(ok);
      seen = seen || ok;
    }
  }
}

TEST_CASE("phi realiser") {
  ClP gr = atom("g"), n = atom("n");
  // discards the recursive argument and returns K
  ClP fr = bracket("g", bracket("n", bracket("r", K())));
  CHECK(checkPhiLaw(fr, gr, n, 10000));
  ClP F = app(pcaFix(), phiRealiser());
  CHECK(clEqual(whnf(apps(F, {fr, gr, n}), 10000), K()));
  // applies its recursive argument to n: never stops, on both sides
  ClP loop = bracket("g", bracket("n", bracket("r", app(var("r"), var("n")))));
  CHECK(checkPhiLaw(loop, gr, n, 10000));
  CHECK(checkPhiLaw(fr, gr, n, 0));
  // an opaque fr leaves the recursion visible on both sides
  CHECK(checkPhiLaw(atom("fr"), gr, n, 10000));
}

TEST_CASE("truncateM examples") {
  auto t1 = truncateM(tokens({"a", "b"}, {{"1", 0}, {"1", 1}}));
  CHECK(t1.quotient.carrier.size() == 1);
  auto t2 = truncateM(tokens({"a", "b"}, {{"1", 0}, {"2", 1}}));
  CHECK(t2.quotient.carrier.size() == 2);
  auto t3 = truncateM(tokens({"a", "b", "c"}, {{"1", 0}, {"1", 1}, {"2", 1}, {"2", 2}}));
  CHECK(t3.quotient.carrier.size() == 1);
  CHECK(t3.quotient.modest());
  CHECK(t3.per.valid());
  CHECK(t3.eta == std::vector<int>{0, 0, 0});
}

TEST_CASE("tracking examples") {
  FiniteAssembly a;
  a.carrier = {"x", "y"};
  a.realises = {{K(), 0}, {S(), 1}};
  CHECK(checkTracking(a, a, {{0, 1}, I(), 100}));
  FiniteAssembly b;
  b.carrier = {"p", "q"};
  b.realises = {{K(), 0}, {S(), 1}};
  CHECK(checkTracking(a, b, {{0, 0}, bracket("x", K()), 100}));
  // x and z share a realiser, their images do not
  FiniteAssembly c;
  c.carrier = {"x", "z"};
  c.realises = {{K(), 0}, {K(), 1}};
  CHECK_FALSE(checkTracking(c, b, {{0, 1}, I(), 100}));
  CHECK_FALSE(checkTracking(a, b, {{1, 0}, I(), 100}));
}

TEST_CASE("pairing tracks the extension") {
  FiniteAssembly g;
  g.carrier = {"g0", "g1"};
  g.realises = {{K(), 0}, {S(), 1}};
  FiniteAssembly d;
  d.carrier = {"d0", "d1"};
  d.realises = {{Pr1(), 0}, {Pr2(), 1}};
  FiniteAssembly a;
  a.carrier = {"a"};
  a.realises = {{K(), 0}};
  TrackedMorphism e{{0, 0}, bracket("n", K()), 1000};
  REQUIRE(checkTracking(g, a, e));
  FiniteAssembly da = productAssembly(d, a);
  TrackedMorphism fc{{0, 0}, bracket("n", Pr1()), 1000};
  REQUIRE(checkTracking(g, d, fc));
  TrackedMorphism pairing{{0, 0}, pairTracker(fc.tracker, e.tracker), 1000};
  CHECK(checkTracking(g, da, pairing));
  TrackedMorphism off{{1, 0}, pairTracker(fc.tracker, e.tracker), 1000};
  CHECK_FALSE(checkTracking(g, da, off));
}

TEST_CASE("universal property of M at small sizes") {
  auto u = checkUniversalProperty(2, 2);
  CHECK(u.failures == 0);
  CHECK(u.notModest == 0);
  CHECK(u.etaUntracked == 0);
  CHECK(u.morphisms > 0);
}

TEST_CASE("vector files") {
  auto run = runVectors("fixlaw (K I) a 10000\n# comment\ntruncate ((a 1) (b 1)) 1\n");
  REQUIRE(run.results.size() == 2);
  CHECK(run.allPass());
  auto wrong = runVectors("track ((x K) (y S)) ((p K) (q S)) ((x q) (y q)) I 100\n");
  CHECK_FALSE(wrong.allPass());
  auto zero = runVectors("fixlaw S a 100000\n", 0);
  CHECK(zero.allPass());
  CHECK_THROWS_AS(runVectors("fixlaw (K a\n"), SmlttError);
  CHECK_THROWS_AS(runVectors("frobnicate 1\n"), SmlttError);
  CHECK_THROWS_AS(runVectors("fixlaw K a many\n"), SmlttError);
}
