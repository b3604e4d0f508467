#include "frontend/printer.hpp"

#include <set>

namespace smltt {

namespace {

enum Level { kTop = 0, kSigma = 1, kCmp = 2, kApp = 3, kAtom = 4 };

bool typeShaped(Tag t) {
  switch (t) {
    case Tag::U:
    case Tag::Size:
    case Tag::Bool:
    case Tag::Top:
    case Tag::Bot:
    case Tag::Pi:
    case Tag::Sigma:
    case Tag::Id:
    case Tag::El:
      return true;
    default:
      return false;
  }
}

bool largeOnly(Tag t) {
  return t == Tag::Bool || t == Tag::Top || t == Tag::Bot || t == Tag::Pi || t == Tag::Sigma || t == Tag::Id;
}

// Terms that a type position wraps in El by itself.
bool autoEl(Tag t) {
  switch (t) {
    case Tag::Var:
    case Tag::Const:
    case Tag::App:
    case Tag::ForApp:
    case Tag::Proj1:
    case Tag::Proj2:
    case Tag::J:
    case Tag::BotInd:
    case Tag::TopInd:
    case Tag::BoolInd:
    case Tag::ExInd:
    case Tag::Fix:
    case Tag::FixBeta:
    case Tag::Ann:
      return true;
    default:
      return false;
  }
}

struct Printer {
  std::vector<std::string> names;

  std::string fresh() const { return "x" + std::to_string(names.size()); }

  static std::string wrap(const std::string& s, int level, int prec) { return level < prec ? "(" + s + ")" : s; }

  std::string under(const std::string& n, const TermP& t, bool type, int prec) {
    names.push_back(n);
    std::string s = go(t, type, prec);
    names.pop_back();
    return s;
  }

  std::string underMany(const std::vector<std::string>& ns, const TermP& t, bool type, int prec) {
    for (const auto& n : ns) names.push_back(n);
    std::string s = go(t, type, prec);
    names.resize(names.size() - ns.size());
    return s;
  }

  std::vector<std::string> freshMany(std::size_t n) const {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back("x" + std::to_string(names.size() + k));
    return out;
  }

  static std::string join(const std::vector<std::string>& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : " ") + x;
    return s;
  }

  // Non-dependent domains: an annotation would read as a binder group.
  std::string domain(const TermP& a, bool type, int prec) {
    std::string s = go(a, type, prec);
    const Term* base = a->tag == Tag::El ? a->kids[0].get() : a.get();
    if (base->tag == Tag::Ann) s = "(" + s + ")";
    return s;
  }

  std::string quant(const TermP& t) {
    bool isForall = t->tag == Tag::ForallCode;
    const std::string kw = isForall ? "forall " : "exists ";
    const TermP& b = t->kids[0];
    Tag guardTag = isForall ? Tag::PiCode : Tag::SigCode;
    std::string x = fresh();
    if (b->tag == guardTag && b->kids[0]->tag == Tag::LeqCode) {
      const TermP& lo = b->kids[0]->kids[0];
      const TermP& hi = b->kids[0]->kids[1];
      if (lo->tag == Tag::SzSuc && lo->kids[0]->tag == Tag::Var && lo->kids[0]->index == 0 && !occursFree(hi, 0) &&
          !occursFree(b->kids[1], 0)) {
        names.push_back(x);
        std::string bound = go(hi, false, kApp);
        std::string body = under(fresh(), b->kids[1], false, kTop);
        names.pop_back();
        return kw + x + " < " + bound + " . " + body;
      }
    }
    return kw + x + ". " + under(x, b, false, kTop);
  }

  std::string go(const TermP& t, bool type, int prec) {
    if (type && !typeShaped(t->tag)) return "%term(" + go(t, false, kTop) + ")";
    if (!type && largeOnly(t->tag)) return "%type(" + go(t, true, kTop) + ")";
    const auto& k = t->kids;
    switch (t->tag) {
      case Tag::Var: {
        std::size_t d = names.size();
        if (t->index >= d) return "?" + std::to_string(t->index);
        return names[d - 1 - t->index];
      }
      case Tag::Const: return t->name;
      case Tag::U: return "U";
      case Tag::Size: return "Size";
      case Tag::Bool:
      case Tag::BoolCode: return "Bool";
      case Tag::Top:
      case Tag::TopCode: return "Top";
      case Tag::Bot:
      case Tag::BotCode: return "Bot";
      case Tag::Star: return "star";
      case Tag::Tt: return "tt";
      case Tag::Ff: return "ff";
      case Tag::Sz0: return "0s";
      case Tag::SzSuc: return "^" + go(k[0], false, kAtom);
      case Tag::El: {
        const TermP& c = k[0];
        if (type) {
          if (c->tag == Tag::ForallCode || c->tag == Tag::ExistsCode || c->tag == Tag::LeqCode) return go(c, false, prec);
          if (autoEl(c->tag)) return go(c, false, prec);
        }
        return wrap("El " + go(c, false, kAtom), kApp, prec);
      }
      case Tag::Pi:
      case Tag::PiCode: {
        std::string x = fresh();
        if (occursFree(k[1], 0))
          return wrap("(" + x + " : " + go(k[0], type, kTop) + ") -> " + under(x, k[1], type, kTop), kTop, prec);
        return wrap(domain(k[0], type, kSigma) + " -> " + under(x, k[1], type, kTop), kTop, prec);
      }
      case Tag::Sigma:
      case Tag::SigCode: {
        std::string x = fresh();
        if (occursFree(k[1], 0))
          return wrap("(" + x + " : " + go(k[0], type, kTop) + ") ** " + under(x, k[1], type, kSigma), kSigma, prec);
        return wrap(domain(k[0], type, kCmp) + " ** " + under(x, k[1], type, kSigma), kSigma, prec);
      }
      case Tag::Id:
      case Tag::IdCode:
        return wrap("Id " + go(k[0], type, kAtom) + " " + go(k[1], false, kAtom) + " " + go(k[2], false, kAtom), kApp, prec);
      case Tag::Lam:
      case Tag::ForLam: {
        std::vector<std::string> xs;
        TermP body = t;
        while (body->tag == t->tag) {
          xs.push_back("x" + std::to_string(names.size() + xs.size()));
          body = body->kids[0];
        }
        std::string s = (t->tag == Tag::Lam ? "fun " : "fun^ ") + join(xs) + " => " + underMany(xs, body, false, kTop);
        return wrap(s, kTop, prec);
      }
      case Tag::App:
        return wrap(go(k[0], false, kApp) + " " + go(k[1], false, kAtom), kApp, prec);
      case Tag::ForApp:
        return wrap(go(k[0], false, kApp) + " @ " + go(k[1], false, kAtom), kApp, prec);
      case Tag::Proj1: return wrap("fst " + go(k[0], false, kAtom), kApp, prec);
      case Tag::Proj2: return wrap("snd " + go(k[0], false, kAtom), kApp, prec);
      case Tag::Refl: return wrap("refl " + go(k[0], false, kAtom), kApp, prec);
      case Tag::Fix: return wrap("fix " + go(k[0], false, kAtom), kApp, prec);
      case Tag::FixBeta: return wrap("fixb " + go(k[0], false, kAtom), kApp, prec);
      case Tag::Pair: return "(" + go(k[0], false, kTop) + ", " + go(k[1], false, kTop) + ")";
      case Tag::ExPair: return "[" + go(k[0], false, kTop) + ", " + go(k[1], false, kTop) + "]";
      case Tag::Ann: return "(" + go(k[0], false, kTop) + " : " + go(k[1], true, kTop) + ")";
      case Tag::J: {
        auto m = freshMany(3);
        auto b = freshMany(1);
        std::string s = "J (" + join(m) + ". " + underMany(m, k[0], true, kTop) + ") (" + b[0] + ". " +
                        underMany(b, k[1], false, kTop) + ") " + go(k[2], false, kAtom) + " " + go(k[3], false, kAtom) +
                        " " + go(k[4], false, kAtom);
        return wrap(s, kApp, prec);
      }
      case Tag::BotInd:
      case Tag::TopInd:
      case Tag::BoolInd: {
        auto z = freshMany(1);
        std::string s = std::string(t->tag == Tag::BotInd ? "ind_Bot" : t->tag == Tag::TopInd ? "ind_Top" : "ind_Bool") +
                        " (" + z[0] + ". " + underMany(z, k[0], true, kTop) + ")";
        for (std::size_t a = 1; a < k.size(); ++a) s += " " + go(k[a], false, kAtom);
        return wrap(s, kApp, prec);
      }
      case Tag::ExInd: {
        auto z = freshMany(1);
        auto ix = freshMany(2);
        std::string s = "ind_Ex (" + z[0] + ". " + underMany(z, k[0], false, kTop) + ") (" + join(ix) + ". " +
                        underMany(ix, k[1], false, kTop) + ") " + go(k[2], false, kAtom);
        return wrap(s, kApp, prec);
      }
      case Tag::LeqCode: {
        if (k[0]->tag == Tag::SzSuc)
          return wrap(go(k[0]->kids[0], false, kApp) + " < " + go(k[1], false, kApp), kCmp, prec);
        return wrap(go(k[0], false, kApp) + " <= " + go(k[1], false, kApp), kCmp, prec);
      }
      case Tag::ForallCode:
      case Tag::ExistsCode:
        return wrap(quant(t), kTop, prec);
    }
    return "?";
  }
};

}  // namespace

std::string printTerm(const TermP& t) { return Printer{}.go(t, false, kTop); }

std::string printType(const TermP& t) { return Printer{}.go(t, true, kTop); }

std::string printWith(const TermP& t, const std::vector<std::string>& names, bool typePosition) {
  Printer p;
  std::set<std::string> seen;
  for (std::size_t l = 0; l < names.size(); ++l) {
    std::string n = names[l];
    if (n.empty() || n == "_" || seen.count(n)) n = "x" + std::to_string(l);
    seen.insert(n);
    p.names.push_back(n);
  }
  return p.go(t, typePosition, kTop);
}

}  // namespace smltt
