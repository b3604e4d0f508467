#pragma once

#include "nbe/value.hpp"

namespace smltt {

namespace val {
V make(VTag t, std::vector<V> vs = {});
V withClosure(VTag t, std::vector<V> vs, Closure c);
V var(std::uint32_t level);
V constant(const std::string& name, std::shared_ptr<const GlobalEntry> def);
V U();
V size();
V boolean();
V top();
V bot();
V pi(V dom, Closure cod);
V sigma(V dom, Closure cod);
V arrow(V dom, V cod);
V id(V ty, V a, V b);
}  // namespace val

V eval(const Env& env, const TermP& t);

V vApp(const V& f, const V& a);
V vForApp(const V& f, const V& s);
V vProj1(const V& p);
V vProj2(const V& p);
V vEl(const V& c);
V vJ(const Closure& motive, const Closure& base, const V& x, const V& y, const V& p);
V vBotInd(const Closure& motive, const V& s);
V vTopInd(const Closure& motive, const V& base, const V& s);
V vBoolInd(const Closure& motive, const V& t, const V& f, const V& s);
V vExInd(const Closure& motive, const Closure& branch, const V& e);

// Unfold constant-headed neutrals until the head is rigid.
V force(const V& v);

struct ReadbackOptions {
  bool unfold = false;  // δ-unfold defined constants
};

TermP readback(std::uint32_t depth, const V& v, ReadbackOptions opts = {});

// Untyped conversion with η for λ, pairs and ∀-λ.
bool conv(std::uint32_t depth, const V& a, const V& b);
// Type-directed conversion: η at Π, Σ and ∀ is decided by the type.
bool convert(std::uint32_t depth, const V& a, const V& b, const V& ty);

}  // namespace smltt
