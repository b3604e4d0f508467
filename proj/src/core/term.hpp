#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace smltt {

// Core syntax. Binders are nameless; a child of a node may sit under a
// fixed number of binders given by binderCount().
enum class Tag : std::uint8_t {
  Var, U, El,
  Pi, Lam, App,
  Sigma, Pair, Proj1, Proj2,
  Id, Refl, J,
  Bot, BotInd, Top, Star, TopInd,
  Bool, Tt, Ff, BoolInd,
  Size, Sz0, SzSuc, LeqCode,
  Const,
  Fix, FixBeta,
  ExistsCode, ExPair, ExInd,
  ForallCode, ForLam, ForApp,
  BotCode, TopCode, BoolCode, PiCode, SigCode, IdCode,
  Ann,
};

struct Term;
using TermP = std::shared_ptr<const Term>;

struct Term {
  Tag tag;
  std::uint32_t index = 0;  // Var
  std::string name;         // Const
  std::vector<TermP> kids;
};

const char* tagName(Tag t);

// Number of binders enclosing child `child` of a node tagged `t`.
int binderCount(Tag t, std::size_t child);

namespace mk {
TermP var(std::uint32_t i);
TermP leaf(Tag t);
TermP node(Tag t, std::vector<TermP> kids);
TermP constant(std::string name);

inline TermP U() { return leaf(Tag::U); }
inline TermP el(TermP c) { return node(Tag::El, {std::move(c)}); }
inline TermP pi(TermP a, TermP b) { return node(Tag::Pi, {std::move(a), std::move(b)}); }
inline TermP lam(TermP b) { return node(Tag::Lam, {std::move(b)}); }
inline TermP app(TermP f, TermP a) { return node(Tag::App, {std::move(f), std::move(a)}); }
inline TermP sigma(TermP a, TermP b) { return node(Tag::Sigma, {std::move(a), std::move(b)}); }
inline TermP pair(TermP a, TermP b) { return node(Tag::Pair, {std::move(a), std::move(b)}); }
inline TermP proj1(TermP t) { return node(Tag::Proj1, {std::move(t)}); }
inline TermP proj2(TermP t) { return node(Tag::Proj2, {std::move(t)}); }
inline TermP id(TermP a, TermP x, TermP y) { return node(Tag::Id, {std::move(a), std::move(x), std::move(y)}); }
inline TermP refl(TermP a) { return node(Tag::Refl, {std::move(a)}); }
inline TermP J(TermP motive, TermP base, TermP x, TermP y, TermP p) {
  return node(Tag::J, {std::move(motive), std::move(base), std::move(x), std::move(y), std::move(p)});
}
inline TermP bot() { return leaf(Tag::Bot); }
inline TermP top() { return leaf(Tag::Top); }
inline TermP star() { return leaf(Tag::Star); }
inline TermP boolean() { return leaf(Tag::Bool); }
inline TermP tt() { return leaf(Tag::Tt); }
inline TermP ff() { return leaf(Tag::Ff); }
inline TermP botInd(TermP m, TermP s) { return node(Tag::BotInd, {std::move(m), std::move(s)}); }
inline TermP topInd(TermP m, TermP b, TermP s) { return node(Tag::TopInd, {std::move(m), std::move(b), std::move(s)}); }
inline TermP boolInd(TermP m, TermP t, TermP f, TermP s) {
  return node(Tag::BoolInd, {std::move(m), std::move(t), std::move(f), std::move(s)});
}
inline TermP size() { return leaf(Tag::Size); }
inline TermP sz0() { return leaf(Tag::Sz0); }
inline TermP szSuc(TermP s) { return node(Tag::SzSuc, {std::move(s)}); }
inline TermP leq(TermP i, TermP j) { return node(Tag::LeqCode, {std::move(i), std::move(j)}); }
inline TermP fix(TermP f) { return node(Tag::Fix, {std::move(f)}); }
inline TermP fixBeta(TermP f) { return node(Tag::FixBeta, {std::move(f)}); }
inline TermP exists(TermP b) { return node(Tag::ExistsCode, {std::move(b)}); }
inline TermP exPair(TermP s, TermP w) { return node(Tag::ExPair, {std::move(s), std::move(w)}); }
inline TermP exInd(TermP m, TermP br, TermP e) { return node(Tag::ExInd, {std::move(m), std::move(br), std::move(e)}); }
inline TermP forall(TermP b) { return node(Tag::ForallCode, {std::move(b)}); }
inline TermP forLam(TermP b) { return node(Tag::ForLam, {std::move(b)}); }
inline TermP forApp(TermP f, TermP s) { return node(Tag::ForApp, {std::move(f), std::move(s)}); }
inline TermP botCode() { return leaf(Tag::BotCode); }
inline TermP topCode() { return leaf(Tag::TopCode); }
inline TermP boolCode() { return leaf(Tag::BoolCode); }
inline TermP piCode(TermP a, TermP b) { return node(Tag::PiCode, {std::move(a), std::move(b)}); }
inline TermP sigCode(TermP a, TermP b) { return node(Tag::SigCode, {std::move(a), std::move(b)}); }
inline TermP idCode(TermP a, TermP x, TermP y) { return node(Tag::IdCode, {std::move(a), std::move(x), std::move(y)}); }
inline TermP ann(TermP t, TermP ty) { return node(Tag::Ann, {std::move(t), std::move(ty)}); }
TermP sizeLit(unsigned n);
}  // namespace mk

// Shift free indices >= cutoff by amount.
TermP weaken(const TermP& t, std::uint32_t cutoff, std::uint32_t amount);
// Substitute s for index 0 and lower the remaining free indices.
TermP substTop(const TermP& t, const TermP& s);
// Simultaneous substitution for indices 0..n-1; subst[0] replaces index 0.
TermP substMany(const TermP& t, const std::vector<TermP>& subst);
bool alphaEq(const TermP& a, const TermP& b);

// True iff every Var is bound within `depth` enclosing binders.
bool wellScoped(const TermP& t, std::uint32_t depth);
// True iff index `i` occurs free in t.
bool occursFree(const TermP& t, std::uint32_t i);
// Lower free indices above `i` by one; requires !occursFree(t, i).
TermP strengthen(const TermP& t, std::uint32_t i);

std::size_t termSize(const TermP& t);
// Names of every Const reachable from t.
void collectConsts(const TermP& t, std::vector<std::string>& out);

enum class DeclKind { Def, Axiom };

struct TopLevelDecl {
  std::string name;
  TermP declaredType;
  TermP body;  // null for axioms
  DeclKind kind = DeclKind::Def;
};

}  // namespace smltt
