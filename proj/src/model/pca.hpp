#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace smltt::model {

// Combinatory terms over S, K and primitive pairing. Atoms are inert tokens;
// Var is the hole used by bracket abstraction.
enum class ClKind : std::uint8_t { S, K, Pr, Pr1, Pr2, App, Atom, Var };

struct Cl;
using ClP = std::shared_ptr<const Cl>;

struct Cl {
  ClKind kind;
  std::string name;  // Atom / Var
  ClP f, a;          // App
};

namespace cl {
ClP S();
ClP K();
ClP I();  // S K K
ClP Pr();
ClP Pr1();
ClP Pr2();
ClP atom(const std::string& n);
ClP var(const std::string& n);
ClP app(ClP f, ClP a);
ClP apps(ClP f, const std::vector<ClP>& args);
}  // namespace cl

bool clEqual(const ClP& a, const ClP& b);  // syntactic
std::size_t clSize(const ClP& t);          // number of leaves
std::string printCl(const ClP& t);

// s-expressions: S K I Pr Pr1 Pr2 fix phi, (f a b ...), (lam x body); other words are atoms.
ClP parseCl(const std::string& text);

struct ReduceResult {
  std::optional<ClP> value;  // empty: Diverged at this fuel
  std::uint64_t steps = 0;
  bool diverged() const { return !value; }
};

// Weak head reduction; each S, K, Pr1, Pr2 contraction costs one unit.
ReduceResult reduce(const ClP& t, std::uint64_t fuel);

// Kleene equality at a fuel bound: both undefined, or both defined with the
// same observable behaviour. Function values are compared by application to
// fresh atoms; the comparison looks `depth` levels deep.
bool kleeneEqual(const ClP& a, const ClP& b, std::uint64_t fuel, int depth = 6);

// Λx.body, without the η shortcut so that partial applications stay values.
ClP bracket(const std::string& x, const ClP& body);

ClP pcaFix();
ClP phiRealiser();

// Steps taken before the argument in head position is reached; not charged to
// the unfolding side of a law.
std::uint64_t fixUnfoldCost();
std::uint64_t phiUnfoldCost();

bool checkFixLaw(const ClP& f, const ClP& a, std::uint64_t fuel);
bool checkPhiLaw(const ClP& fr, const ClP& gr, const ClP& n, std::uint64_t fuel);

}  // namespace smltt::model
