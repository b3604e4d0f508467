#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "model/pca.hpp"

namespace smltt::model {

// Realisers are combinatory terms; abstract tokens are atoms.
struct FiniteAssembly {
  std::vector<std::string> carrier;
  std::vector<std::pair<ClP, int>> realises;  // (realiser, element index)

  bool valid() const;   // every element realised, indices in range
  bool modest() const;  // no realiser codes two elements
  std::vector<ClP> realisersOf(int x) const;
};

struct FinitePer {
  std::vector<std::vector<ClP>> classes;
  bool valid() const;  // nonempty, pairwise disjoint
};

struct TrackedMorphism {
  std::vector<int> table;  // carrier(A) -> carrier(B)
  ClP tracker;
  std::uint64_t fuel = 100000;
};

bool checkTracking(const FiniteAssembly& a, const FiniteAssembly& b, const TrackedMorphism& m);

struct Truncation {
  FiniteAssembly quotient;  // one element per class, realised by the union
  FinitePer per;
  std::vector<int> eta;     // element -> class
};

// Merges elements that share a realiser, transitively.
Truncation truncateM(const FiniteAssembly& a);

// The same construction over small token universes, where a tracker is any
// map on tokens. Used by the exhaustive check of M's universal property.
struct TokenAssembly {
  int elements = 0;
  std::vector<unsigned> realisers;  // bitmask of tokens per element
};

bool tokenModest(const TokenAssembly& a);
std::vector<int> tokenClasses(const TokenAssembly& a, int& count);
// g is tracked when some map e on tokens sends every realiser of x to a realiser of g(x).
bool tokenTracked(const TokenAssembly& a, const TokenAssembly& b, const std::vector<int>& g, int tokens);

struct UniversalReport {
  std::uint64_t assemblies = 0;
  std::uint64_t morphisms = 0;   // tracked g checked
  std::uint64_t failures = 0;    // zero or several factorizations
  std::uint64_t notModest = 0;   // truncations that were not modest
  std::uint64_t etaUntracked = 0;
};

// Every assembly with at most `maxElems` elements over `tokens` tokens, every
// modest target of the same bounds, every tracked g.
UniversalReport checkUniversalProperty(int maxElems, int tokens);

// ⟨d, e⟩ as Λn. Pr (d n) (e n).
ClP pairTracker(const ClP& d, const ClP& e);

// Product of assemblies realised by pairs.
FiniteAssembly productAssembly(const FiniteAssembly& a, const FiniteAssembly& b);

}  // namespace smltt::model
