#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/term.hpp"

namespace smltt {

struct Value;
using V = std::shared_ptr<const Value>;
struct GlobalEntry;
class GlobalTable;

struct EnvNode {
  V val;
  std::shared_ptr<const EnvNode> next;
};

// One value per enclosing binder; index 0 is the innermost.
struct Env {
  std::shared_ptr<const EnvNode> head;
  std::uint32_t size = 0;
  const GlobalTable* globals = nullptr;

  Env extend(V v) const;
  const V& lookup(std::uint32_t i) const;
};

struct Closure {
  Env env;
  TermP body;
  std::function<V(const std::vector<V>&)> native;
  int arity = 1;

  V apply(const std::vector<V>& args) const;
  V apply(const V& a) const { return apply(std::vector<V>{a}); }
};

Closure nativeClosure(int arity, std::function<V(const std::vector<V>&)> fn);

enum class VTag : std::uint8_t {
  U, Pi, Lam, Sigma, Pair, Id, Refl,
  Bot, Top, Star, Bool, Tt, Ff,
  Size, Sz0, SzSuc,
  BotCode, TopCode, BoolCode, PiCode, SigCode, IdCode, LeqCode, ExistsCode, ForallCode,
  ExPair, ForLam,
  El,  // El of a LeqCode/ExistsCode/ForallCode value
  Neutral,
};

enum class HeadKind : std::uint8_t { Var, Const, Fix, FixBeta };

struct Head {
  HeadKind kind = HeadKind::Var;
  std::uint32_t level = 0;                   // Var
  std::string name;                          // Const
  V arg;                                     // Fix / FixBeta argument
  std::shared_ptr<const GlobalEntry> def;    // set when the constant can be unfolded
};

enum class FrameKind : std::uint8_t { App, ForApp, Proj1, Proj2, El, J, BotInd, TopInd, BoolInd, ExInd };

struct Frame {
  FrameKind kind;
  V a, b;          // App/ForApp arg; J lhs/rhs; TopInd base; BoolInd branches
  Closure m, n;    // motive; J base or ExInd branch
};

struct Value {
  VTag tag;
  std::vector<V> vs;
  Closure clo;
  Head head;
  std::vector<Frame> spine;
  mutable V unfolded;  // cache for δ-unfolding of constant-headed neutrals

  bool isNeutral() const { return tag == VTag::Neutral; }
  bool unfoldable() const { return tag == VTag::Neutral && head.kind == HeadKind::Const && head.def != nullptr; }
};

struct GlobalEntry {
  std::string name;
  TermP typeTerm;
  TermP body;      // null for axioms and primitives
  V type;
  bool isAxiom = false;
  bool isPrimitive = false;
  std::string origin;
  const GlobalTable* table = nullptr;
  mutable V valueCache;

  const V& value() const;
};

class GlobalTable {
 public:
  std::shared_ptr<const GlobalEntry> find(const std::string& name) const;
  void add(std::shared_ptr<GlobalEntry> e);
  const std::vector<std::string>& order() const { return order_; }

 private:
  std::unordered_map<std::string, std::shared_ptr<GlobalEntry>> map_;
  std::vector<std::string> order_;
};

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace smltt
