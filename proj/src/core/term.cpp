#include "core/term.hpp"

#include <functional>
#include <unordered_set>

namespace smltt {

const char* tagName(Tag t) {
  switch (t) {
    case Tag::Var: return "Var";
    case Tag::U: return "U";
    case Tag::El: return "El";
    case Tag::Pi: return "Pi";
    case Tag::Lam: return "Lam";
    case Tag::App: return "App";
    case Tag::Sigma: return "Sigma";
    case Tag::Pair: return "Pair";
    case Tag::Proj1: return "Proj1";
    case Tag::Proj2: return "Proj2";
    case Tag::Id: return "Id";
    case Tag::Refl: return "Refl";
    case Tag::J: return "J";
    case Tag::Bot: return "Bot";
    case Tag::BotInd: return "BotInd";
    case Tag::Top: return "Top";
    case Tag::Star: return "Star";
    case Tag::TopInd: return "TopInd";
    case Tag::Bool: return "Bool";
    case Tag::Tt: return "Tt";
    case Tag::Ff: return "Ff";
    case Tag::BoolInd: return "BoolInd";
    case Tag::Size: return "Size";
    case Tag::Sz0: return "Sz0";
    case Tag::SzSuc: return "SzSuc";
    case Tag::LeqCode: return "LeqCode";
    case Tag::Const: return "Const";
    case Tag::Fix: return "Fix";
    case Tag::FixBeta: return "FixBeta";
    case Tag::ExistsCode: return "ExistsCode";
    case Tag::ExPair: return "ExPair";
    case Tag::ExInd: return "ExInd";
    case Tag::ForallCode: return "ForallCode";
    case Tag::ForLam: return "ForLam";
    case Tag::ForApp: return "ForApp";
    case Tag::BotCode: return "BotCode";
    case Tag::TopCode: return "TopCode";
    case Tag::BoolCode: return "BoolCode";
    case Tag::PiCode: return "PiCode";
    case Tag::SigCode: return "SigCode";
    case Tag::IdCode: return "IdCode";
    case Tag::Ann: return "Ann";
  }
  return "?";
}

int binderCount(Tag t, std::size_t child) {
  switch (t) {
    case Tag::Pi:
    case Tag::Sigma:
    case Tag::PiCode:
    case Tag::SigCode:
      return child == 1 ? 1 : 0;
    case Tag::Lam:
    case Tag::ExistsCode:
    case Tag::ForallCode:
    case Tag::ForLam:
      return 1;
    case Tag::J:
      return child == 0 ? 3 : child == 1 ? 1 : 0;
    case Tag::BotInd:
    case Tag::TopInd:
    case Tag::BoolInd:
      return child == 0 ? 1 : 0;
    case Tag::ExInd:
      return child == 0 ? 1 : child == 1 ? 2 : 0;
    default:
      return 0;
  }
}

namespace mk {

TermP var(std::uint32_t i) {
  auto t = std::make_shared<Term>();
  t->tag = Tag::Var;
  t->index = i;
  return t;
}

TermP leaf(Tag tag) {
  auto t = std::make_shared<Term>();
  t->tag = tag;
  return t;
}

TermP node(Tag tag, std::vector<TermP> kids) {
  auto t = std::make_shared<Term>();
  t->tag = tag;
  t->kids = std::move(kids);
  return t;
}

TermP constant(std::string name) {
  auto t = std::make_shared<Term>();
  t->tag = Tag::Const;
  t->name = std::move(name);
  return t;
}

TermP sizeLit(unsigned n) {
  TermP s = sz0();
  for (unsigned k = 0; k < n; ++k) s = szSuc(s);
  return s;
}

}  // namespace mk

namespace {

// Rebuild t, mapping each free variable (index >= depth) through f(index, depth).
// Returns the original pointer when nothing changed.
template <class F>
TermP mapVars(const TermP& t, std::uint32_t depth, const F& f) {
  if (t->tag == Tag::Var) {
    if (t->index < depth) return t;
    return f(t->index, depth);
  }
  if (t->kids.empty()) return t;
  std::vector<TermP> kids;
  kids.reserve(t->kids.size());
  bool changed = false;
  for (std::size_t i = 0; i < t->kids.size(); ++i) {
    TermP k = mapVars(t->kids[i], depth + static_cast<std::uint32_t>(binderCount(t->tag, i)), f);
    changed = changed || k != t->kids[i];
    kids.push_back(std::move(k));
  }
  if (!changed) return t;
  auto n = std::make_shared<Term>(*t);
  n->kids = std::move(kids);
  return n;
}

}  // namespace

TermP weaken(const TermP& t, std::uint32_t cutoff, std::uint32_t amount) {
  if (amount == 0) return t;
  return mapVars(t, 0, [&](std::uint32_t idx, std::uint32_t depth) -> TermP {
    if (idx - depth < cutoff) return mk::var(idx);
    return mk::var(idx + amount);
  });
}

TermP substMany(const TermP& t, const std::vector<TermP>& subst) {
  const auto n = static_cast<std::uint32_t>(subst.size());
  return mapVars(t, 0, [&](std::uint32_t idx, std::uint32_t depth) -> TermP {
    std::uint32_t k = idx - depth;
    if (k < n) return weaken(subst[k], 0, depth);
    return mk::var(idx - n);
  });
}

TermP substTop(const TermP& t, const TermP& s) { return substMany(t, {s}); }

bool alphaEq(const TermP& a, const TermP& b) {
  if (a == b) return true;
  if (a->tag != b->tag || a->kids.size() != b->kids.size()) return false;
  if (a->tag == Tag::Var) return a->index == b->index;
  if (a->tag == Tag::Const) return a->name == b->name;
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (!alphaEq(a->kids[i], b->kids[i])) return false;
  return true;
}

bool wellScoped(const TermP& t, std::uint32_t depth) {
  if (t->tag == Tag::Var) return t->index < depth;
  for (std::size_t i = 0; i < t->kids.size(); ++i)
    if (!wellScoped(t->kids[i], depth + static_cast<std::uint32_t>(binderCount(t->tag, i)))) return false;
  return true;
}

bool occursFree(const TermP& t, std::uint32_t i) {
  if (t->tag == Tag::Var) return t->index == i;
  for (std::size_t k = 0; k < t->kids.size(); ++k)
    if (occursFree(t->kids[k], i + static_cast<std::uint32_t>(binderCount(t->tag, k)))) return true;
  return false;
}

TermP strengthen(const TermP& t, std::uint32_t i) {
  return mapVars(t, 0, [&](std::uint32_t idx, std::uint32_t depth) -> TermP {
    return mk::var(idx - depth > i ? idx - 1 : idx);
  });
}

std::size_t termSize(const TermP& t) {
  std::size_t n = 1;
  for (auto& k : t->kids) n += termSize(k);
  return n;
}

void collectConsts(const TermP& t, std::vector<std::string>& out) {
  if (t->tag == Tag::Const) {
    out.push_back(t->name);
    return;
  }
  for (auto& k : t->kids) collectConsts(k, out);
}

}  // namespace smltt
