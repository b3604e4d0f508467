#include "model/assembly.hpp"

#include <numeric>

namespace smltt::model {

namespace {

bool sameRealiser(const ClP& a, const ClP& b) { return clEqual(a, b); }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

bool FiniteAssembly::valid() const {
  std::vector<bool> seen(carrier.size(), false);
  for (const auto& [r, x] : realises) {
    if (x < 0 || static_cast<std::size_t>(x) >= carrier.size()) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  for (bool s : seen)
    if (!s) return false;
  return true;
}

bool FiniteAssembly::modest() const {
  for (std::size_t i = 0; i < realises.size(); ++i)
    for (std::size_t j = i + 1; j < realises.size(); ++j)
      if (realises[i].second != realises[j].second && sameRealiser(realises[i].first, realises[j].first)) return false;
  return true;
}

std::vector<ClP> FiniteAssembly::realisersOf(int x) const {
  std::vector<ClP> out;
  for (const auto& [r, y] : realises)
    if (y == x) out.push_back(r);
  return out;
}

bool FinitePer::valid() const {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].empty()) return false;
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      for (const auto& a : classes[i])
        for (const auto& b : classes[j])
          if (sameRealiser(a, b)) return false;
  }
  return true;
}

bool checkTracking(const FiniteAssembly& a, const FiniteAssembly& b, const TrackedMorphism& m) {
  if (m.table.size() != a.carrier.size()) return false;
  for (const auto& [r, x] : a.realises) {
    int y = m.table[static_cast<std::size_t>(x)];
    if (y < 0 || static_cast<std::size_t>(y) >= b.carrier.size()) return false;
    auto out = reduce(cl::app(m.tracker, r), m.fuel);
    if (out.diverged()) return false;
    bool ok = false;
    for (const auto& [r2, y2] : b.realises)
      if (y2 == y && kleeneEqual(*out.value, r2, m.fuel)) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

Truncation truncateM(const FiniteAssembly& a) {
  int n = static_cast<int>(a.carrier.size());
  UnionFind uf(n);
  for (std::size_t i = 0; i < a.realises.size(); ++i)
    for (std::size_t j = i + 1; j < a.realises.size(); ++j)
      if (sameRealiser(a.realises[i].first, a.realises[j].first)) uf.unite(a.realises[i].second, a.realises[j].second);
  Truncation t;
  std::vector<int> classOf(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    int root = uf.find(x);
    if (classOf[static_cast<std::size_t>(root)] < 0) {
      classOf[static_cast<std::size_t>(root)] = static_cast<int>(t.quotient.carrier.size());
      t.quotient.carrier.push_back("");
      t.per.classes.emplace_back();
    }
    int c = classOf[static_cast<std::size_t>(root)];
    auto& name = t.quotient.carrier[static_cast<std::size_t>(c)];
    name += (name.empty() ? "{" : ",") + a.carrier[static_cast<std::size_t>(x)];
    t.eta.push_back(c);
  }
  for (auto& name : t.quotient.carrier) name += "}";
  for (const auto& [r, x] : a.realises) {
    int c = t.eta[static_cast<std::size_t>(x)];
    auto& cls = t.per.classes[static_cast<std::size_t>(c)];
    bool dup = false;
    for (const auto& q : cls) dup = dup || sameRealiser(q, r);
    if (!dup) {
      cls.push_back(r);
      t.quotient.realises.emplace_back(r, c);
    }
  }
  return t;
}

bool tokenModest(const TokenAssembly& a) {
  unsigned seen = 0;
  for (unsigned r : a.realisers) {
    if (seen & r) return false;
    seen |= r;
  }
  return true;
}

std::vector<int> tokenClasses(const TokenAssembly& a, int& count) {
  UnionFind uf(a.elements);
  for (int x = 0; x < a.elements; ++x)
    for (int y = x + 1; y < a.elements; ++y)
      if (a.realisers[static_cast<std::size_t>(x)] & a.realisers[static_cast<std::size_t>(y)]) uf.unite(x, y);
  std::vector<int> cls(static_cast<std::size_t>(a.elements), -1), idx(static_cast<std::size_t>(a.elements), -1);
  count = 0;
  for (int x = 0; x < a.elements; ++x) {
    int r = uf.find(x);
    if (idx[static_cast<std::size_t>(r)] < 0) idx[static_cast<std::size_t>(r)] = count++;
    cls[static_cast<std::size_t>(x)] = idx[static_cast<std::size_t>(r)];
  }
  return cls;
}

namespace {

// Realisers of the truncation: the union over each class.
TokenAssembly tokenQuotient(const TokenAssembly& a, const std::vector<int>& cls, int count) {
  TokenAssembly q;
  q.elements = count;
  q.realisers.assign(static_cast<std::size_t>(count), 0);
  for (int x = 0; x < a.elements; ++x)
    q.realisers[static_cast<std::size_t>(cls[static_cast<std::size_t>(x)])] |= a.realisers[static_cast<std::size_t>(x)];
  return q;
}

bool trackedBy(const TokenAssembly& a, const TokenAssembly& b, const std::vector<int>& g, const std::vector<int>& e,
               int tokens) {
  for (int x = 0; x < a.elements; ++x)
    for (int t = 0; t < tokens; ++t)
      if (a.realisers[static_cast<std::size_t>(x)] & (1u << t)) {
        int out = e[static_cast<std::size_t>(t)];
        if (!(b.realisers[static_cast<std::size_t>(g[static_cast<std::size_t>(x)])] & (1u << out))) return false;
      }
  return true;
}

void forEachTokenMap(int tokens, const std::function<bool(const std::vector<int>&)>& f) {
  std::vector<int> e(static_cast<std::size_t>(tokens), 0);
  for (;;) {
    if (f(e)) return;
    int k = 0;
    while (k < tokens && ++e[static_cast<std::size_t>(k)] == tokens) e[static_cast<std::size_t>(k++)] = 0;
    if (k == tokens) return;
  }
}

void forEachMap(int from, int to, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> g(static_cast<std::size_t>(from), 0);
  if (to == 0) {
    if (from == 0) f(g);
    return;
  }
  for (;;) {
    f(g);
    int k = 0;
    while (k < from && ++g[static_cast<std::size_t>(k)] == to) g[static_cast<std::size_t>(k++)] = 0;
    if (k == from) return;
  }
}

std::vector<TokenAssembly> allAssemblies(int maxElems, int tokens, bool modestOnly) {
  std::vector<TokenAssembly> out;
  unsigned subsets = (1u << tokens) - 1;  // nonempty masks 1..subsets
  for (int n = 1; n <= maxElems; ++n) {
    std::vector<unsigned> rs(static_cast<std::size_t>(n), 1);
    for (;;) {
      TokenAssembly a{n, rs};
      if (!modestOnly || tokenModest(a)) out.push_back(a);
      int k = 0;
      while (k < n && ++rs[static_cast<std::size_t>(k)] > subsets) rs[static_cast<std::size_t>(k++)] = 1;
      if (k == n) break;
    }
  }
  return out;
}

}  // namespace

bool tokenTracked(const TokenAssembly& a, const TokenAssembly& b, const std::vector<int>& g, int tokens) {
  bool found = false;
  forEachTokenMap(tokens, [&](const std::vector<int>& e) { return found = trackedBy(a, b, g, e, tokens); });
  return found;
}

UniversalReport checkUniversalProperty(int maxElems, int tokens) {
  UniversalReport rep;
  auto sources = allAssemblies(maxElems, tokens, false);
  auto targets = allAssemblies(maxElems, tokens, true);
  std::vector<int> identity(static_cast<std::size_t>(tokens));
  std::iota(identity.begin(), identity.end(), 0);
  for (const auto& a : sources) {
    ++rep.assemblies;
    int count = 0;
    auto cls = tokenClasses(a, count);
    TokenAssembly q = tokenQuotient(a, cls, count);
    if (!tokenModest(q)) ++rep.notModest;
    if (!trackedBy(a, q, cls, identity, tokens)) ++rep.etaUntracked;
    for (const auto& x : targets) {
      forEachMap(a.elements, x.elements, [&](const std::vector<int>& g) {
        if (!tokenTracked(a, x, g, tokens)) return;
        ++rep.morphisms;
        int factorizations = 0;
        forEachMap(count, x.elements, [&](const std::vector<int>& f) {
          for (int e = 0; e < a.elements; ++e)
            if (f[static_cast<std::size_t>(cls[static_cast<std::size_t>(e)])] != g[static_cast<std::size_t>(e)]) return;
          if (tokenTracked(q, x, f, tokens)) ++factorizations;
        });
        if (factorizations != 1) ++rep.failures;
      });
    }
  }
  return rep;
}

ClP pairTracker(const ClP& d, const ClP& e) {
  using namespace cl;
  return bracket("n", apps(Pr(), {app(d, var("n")), app(e, var("n"))}));
}

FiniteAssembly productAssembly(const FiniteAssembly& a, const FiniteAssembly& b) {
  FiniteAssembly p;
  for (std::size_t x = 0; x < a.carrier.size(); ++x)
    for (std::size_t y = 0; y < b.carrier.size(); ++y) p.carrier.push_back("(" + a.carrier[x] + "," + b.carrier[y] + ")");
  for (const auto& [r, x] : a.realises)
    for (const auto& [s, y] : b.realises)
      p.realises.emplace_back(cl::apps(cl::Pr(), {r, s}), x * static_cast<int>(b.carrier.size()) + y);
  return p;
}

}  // namespace smltt::model
