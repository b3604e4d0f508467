#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "core/term.hpp"
#include "frontend/syntax.hpp"

namespace smltt {

// Type positions elaborate formers to large types and wrap other terms in El;
// term positions elaborate formers to codes.
enum class Mode : std::uint8_t { Type, Term };

struct Notation {
  std::vector<std::string> params;
  STermP body;
};

struct Scope {
  std::vector<std::string> locals;  // innermost last
  const std::map<std::string, Notation>* notations = nullptr;
  // Null means every unresolved name is taken to be a global constant.
  std::function<bool(const std::string&)> isGlobal;
};

TermP elaborate(const STermP& s, const Scope& scope, Mode mode);

struct ElabDecl {
  DeclKind kind = DeclKind::Def;
  std::string name;
  TermP type;                      // null when the definition gives none
  TermP body;                      // wrapped in one λ per binder
  std::vector<TermP> binderTypes;  // each under the preceding binders
  std::vector<std::string> binderNames;
  TermP innerBody;                 // body under the binders
};

// Def and Axiom declarations only.
ElabDecl elaborateDecl(const SurfaceDecl& d, const Scope& scope);

Notation makeNotation(const SurfaceDecl& d);

}  // namespace smltt
