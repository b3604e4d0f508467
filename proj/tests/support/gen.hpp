#pragma once

// Random term generators shared by the unit and acceptance suites.

#include <random>
#include <vector>

#include "core/term.hpp"

namespace smltt::test {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint32_t below(std::uint32_t n) { return n == 0 ? 0 : static_cast<std::uint32_t>(eng() % n); }
  bool coin() { return below(2) == 0; }
};

// Well-scoped, untyped.
inline TermP randomRaw(Rng& r, std::uint32_t depth, int budget) {
  using namespace mk;
  if (budget <= 0 || r.below(4) == 0) {
    switch (r.below(depth > 0 ? 6 : 5)) {
      case 0: return tt();
      case 1: return star();
      case 2: return sz0();
      case 3: return boolCode();
      case 4: return U();
      default: return var(r.below(depth));
    }
  }
  int b = budget - 1;
  switch (r.below(12)) {
    case 0: return lam(randomRaw(r, depth + 1, b));
    case 1: return app(randomRaw(r, depth, b), randomRaw(r, depth, b));
    case 2: return pi(randomRaw(r, depth, b), randomRaw(r, depth + 1, b));
    case 3: return pair(randomRaw(r, depth, b), randomRaw(r, depth, b));
    case 4: return proj1(randomRaw(r, depth, b));
    case 5: return szSuc(randomRaw(r, depth, b));
    case 6: return exPair(randomRaw(r, depth, b), randomRaw(r, depth, b));
    case 7: return forall(randomRaw(r, depth + 1, b));
    case 8: return exInd(randomRaw(r, depth + 1, b), randomRaw(r, depth + 2, b), randomRaw(r, depth, b));
    case 9:
      return J(randomRaw(r, depth + 3, b), randomRaw(r, depth + 1, b), randomRaw(r, depth, b), randomRaw(r, depth, b),
               randomRaw(r, depth, b));
    case 10: return sigCode(randomRaw(r, depth, b), randomRaw(r, depth + 1, b));
    default: return forApp(randomRaw(r, depth, b), randomRaw(r, depth, b));
  }
}

// Typed generation over closed, non-dependent types.
class TypedGen {
 public:
  explicit TypedGen(std::uint64_t seed) : r(seed) {}

  Rng r;

  // Closed small code.
  TermP code(int budget) {
    using namespace mk;
    if (budget <= 0) return r.coin() ? boolCode() : topCode();
    switch (r.below(6)) {
      case 0: return boolCode();
      case 1: return topCode();
      case 2: return piCode(code(budget - 1), code(budget - 1));
      case 3: return sigCode(code(budget - 1), code(budget - 1));
      case 4: return exists(code(budget - 1));
      default: return forall(code(budget - 1));
    }
  }

  // Closed type.
  TermP type(int budget) {
    using namespace mk;
    if (budget <= 0) return r.coin() ? boolean() : top();
    switch (r.below(8)) {
      case 0: return boolean();
      case 1: return top();
      case 2: return pi(type(budget - 1), type(budget - 1));
      case 3: return sigma(type(budget - 1), type(budget - 1));
      case 4: return el(code(budget - 1));
      case 5: return id(boolean(), tt(), tt());
      case 6: return el(exists(code(budget - 1)));
      default: return el(forall(code(budget - 1)));
    }
  }

  struct Local {
    TermP type;  // closed
  };

  // A term of closed type `ty` in a context of closed-typed locals.
  TermP term(std::vector<Local>& ctx, const TermP& ty, int budget) {
    using namespace mk;
    std::uint32_t d = static_cast<std::uint32_t>(ctx.size());
    if (budget > 0) {
      switch (r.below(9)) {
        case 0: {  // beta redex
          TermP x = type(1);
          ctx.push_back({x});
          TermP body = term(ctx, ty, budget - 1);
          ctx.pop_back();
          return app(ann(lam(body), pi(x, ty)), term(ctx, x, budget - 1));
        }
        case 1: {  // projection of a pair
          TermP y = type(1);
          return r.coin() ? proj1(ann(pair(term(ctx, ty, budget - 1), term(ctx, y, budget - 1)), sigma(ty, y)))
                          : proj2(ann(pair(term(ctx, y, budget - 1), term(ctx, ty, budget - 1)), sigma(y, ty)));
        }
        case 2: {  // J on refl
          TermP a = term(ctx, boolean(), 0);
          ctx.push_back({boolean()});
          TermP base = term(ctx, ty, budget - 1);
          ctx.pop_back();
          return J(ty, base, a, a, refl(a));
        }
        case 3:
          return boolInd(ty, term(ctx, ty, budget - 1), term(ctx, ty, budget - 1), term(ctx, boolean(), budget - 1));
        case 4:
          if (ty->tag == Tag::El) {  // ind_Ex with a small motive
            TermP c = code(1);
            ctx.push_back({size()});
            ctx.push_back({el(c)});
            TermP br = term(ctx, ty, budget - 1);
            ctx.pop_back();
            ctx.pop_back();
            return exInd(ty->kids[0], br, ann(term(ctx, el(exists(c)), budget - 1), el(exists(c))));
          }
          break;
        case 5:
          if (ty->tag == Tag::El) {  // forall application
            ctx.push_back({size()});
            TermP body = term(ctx, ty, budget - 1);
            ctx.pop_back();
            return forApp(ann(forLam(body), el(forall(ty->kids[0]))), sizeTerm(budget - 1));
          }
          break;
        case 6: {  // applied variable
          for (std::uint32_t k = 0; k < d; ++k) {
            const TermP& vt = ctx[d - 1 - k].type;
            TermP dom, cod;
            if (vt->tag == Tag::Pi) {
              dom = vt->kids[0];
              cod = vt->kids[1];
            } else if (vt->tag == Tag::El && vt->kids[0]->tag == Tag::PiCode) {
              dom = el(vt->kids[0]->kids[0]);
              cod = el(vt->kids[0]->kids[1]);
            }
            if (cod && sameType(cod, ty)) return app(var(k), term(ctx, dom, budget - 1));
          }
          break;
        }
        default:
          break;
      }
    }
    for (std::uint32_t k = 0; k < d; ++k)
      if (r.below(3) == 0 && alphaEq(ctx[d - 1 - k].type, ty)) return var(k);
    return intro(ctx, ty, budget);
  }

  TermP sizeTerm(int budget) {
    using namespace mk;
    TermP s = sz0();
    int n = static_cast<int>(r.below(static_cast<std::uint32_t>(std::max(1, budget) + 1)));
    for (int k = 0; k < n; ++k) s = szSuc(s);
    return s;
  }

 private:
  static bool sameType(const TermP& a, const TermP& b) {
    if (alphaEq(a, b)) return true;
    // El of the basic codes computes to the large forms.
    auto norm = [](const TermP& t) -> TermP {
      if (t->tag == Tag::El && t->kids[0]->tag == Tag::BoolCode) return mk::boolean();
      if (t->tag == Tag::El && t->kids[0]->tag == Tag::TopCode) return mk::top();
      return t;
    };
    return alphaEq(norm(a), norm(b));
  }

  TermP intro(std::vector<Local>& ctx, const TermP& ty, int budget) {
    using namespace mk;
    int b = budget - 1;
    switch (ty->tag) {
      case Tag::Bool: return r.coin() ? tt() : ff();
      case Tag::Top: return star();
      case Tag::Size: return sizeTerm(b);
      case Tag::Id: return refl(ty->kids[1]);
      case Tag::Pi: {
        ctx.push_back({ty->kids[0]});
        TermP body = term(ctx, ty->kids[1], b);
        ctx.pop_back();
        return lam(body);
      }
      case Tag::Sigma: return pair(term(ctx, ty->kids[0], b), term(ctx, ty->kids[1], b));
      case Tag::El: {
        const TermP& c = ty->kids[0];
        switch (c->tag) {
          case Tag::BoolCode: return intro(ctx, boolean(), budget);
          case Tag::TopCode: return star();
          case Tag::PiCode: {
            ctx.push_back({el(c->kids[0])});
            TermP body = term(ctx, el(c->kids[1]), b);
            ctx.pop_back();
            return lam(body);
          }
          case Tag::SigCode: return pair(term(ctx, el(c->kids[0]), b), term(ctx, el(c->kids[1]), b));
          case Tag::ExistsCode: return exPair(sizeTerm(b), term(ctx, el(c->kids[0]), b));
          case Tag::ForallCode: {
            ctx.push_back({size()});
            TermP body = term(ctx, el(c->kids[0]), b);
            ctx.pop_back();
            return forLam(body);
          }
          default: break;
        }
        break;
      }
      default: break;
    }
    return star();
  }
};

}  // namespace smltt::test
