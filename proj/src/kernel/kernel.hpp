#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/term.hpp"
#include "nbe/nbe.hpp"

namespace smltt {

// Telescope of local variable types plus the global table it lives in.
struct Ctx {
  Env env;
  std::vector<V> types;
  std::vector<std::string> names;

  std::uint32_t depth() const { return env.size; }
  Ctx bind(const std::string& name, V ty) const;
};

// Names of the built-in constants whose types are fixed by the kernel.
bool isSizeOrderConstant(const std::string& name);
inline const char* kFunext = "funext";

class Kernel {
 public:
  Kernel();
  Kernel(const Kernel&) = delete;
  Kernel& operator=(const Kernel&) = delete;

  const GlobalTable& globals() const { return globals_; }
  Ctx emptyCtx() const;

  V infer(const Ctx& ctx, const TermP& t);
  void check(const Ctx& ctx, const TermP& t, const V& ty);
  void checkType(const Ctx& ctx, const TermP& t);

  // Checks and registers a declaration. `trusted` marks prelude input,
  // where axioms are accepted.
  void checkDecl(const TopLevelDecl& d, bool trusted, const std::string& origin = "");

  std::set<std::string> usedAxioms(const std::string& name);
  std::vector<std::string> axiomNames() const;

  // Rendering helpers for diagnostics and queries.
  std::string show(const Ctx& ctx, const V& v, bool unfold = false) const;
  std::string showTerm(const Ctx& ctx, const TermP& t) const;

  // The type funext is given at a Π-typed pair of functions.
  V funextType(const V& piType, const V& f, const V& g) const;

 private:
  V evalIn(const Ctx& ctx, const TermP& t) const { return eval(ctx.env, t); }
  void checkSmall(const Ctx& ctx, const TermP& t, const char* where);
  V inferFixFamily(const Ctx& ctx, const TermP& f, Closure& family);
  [[noreturn]] void mismatch(const Ctx& ctx, const TermP& t, const V& expected, const V& actual);

  GlobalTable globals_;
  std::map<std::string, std::set<std::string>> axiomCache_;
};

// Value-level builders shared with tests.
V fixFunctionType(const Closure& family);
V fixBetaType(const Closure& family, const V& f);
V isEquivValue(const V& a, const V& b, const V& f);

}  // namespace smltt
