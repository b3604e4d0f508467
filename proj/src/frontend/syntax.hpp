#pragma once

#include <memory>
#include <string>
#include <vector>

namespace smltt {

struct STerm;
using STermP = std::shared_ptr<const STerm>;

enum class SKind : std::uint8_t {
  Ident,      // name
  Num,        // num
  Lam,        // binders, kids[0] body
  ForLam,     // binders, kids[0] body
  Pi,         // binders (maybe empty), kids {dom, cod}
  Sigma,      // binders (maybe empty), kids {fst, snd}
  Forall,     // binders, kids {body} or {bound, body}
  Exists,     // binders, kids {body} or {bound, body}
  Leq,        // kids {i, j}
  Lt,         // kids {i, j}
  Suc,        // kids {s}
  App,        // kids {f, a}
  ForApp,     // kids {f, s}
  Pair,       // kids {a, b}
  ExPair,     // kids {s, a}
  Ann,        // kids {e, A}
  Elim,       // name = eliminator, groups = binder groups, kids = group bodies then arguments
  ForceType,  // kids {e}
  ForceTerm,  // kids {e}
  Let,        // binders {x}, kids {e, body}
};

struct STerm {
  SKind kind;
  std::string name;
  unsigned num = 0;
  std::vector<std::string> binders;
  std::vector<std::vector<std::string>> groups;
  std::vector<STermP> kids;
  int line = 0;
  int col = 0;
};

struct SBinder {
  std::vector<std::string> names;
  STermP type;
};

enum class SDeclKind : std::uint8_t { Def, Axiom, Notation, Import };

struct SurfaceDecl {
  SDeclKind kind = SDeclKind::Def;
  std::string name;
  std::vector<SBinder> binders;
  STermP type;  // null when omitted
  STermP body;  // null for axioms
  std::string path;
  int line = 0;
  int col = 0;
};

// Throws SmlttError(SyntaxError) with position.
std::vector<SurfaceDecl> parse(const std::string& text);
STermP parseTerm(const std::string& text);

}  // namespace smltt
