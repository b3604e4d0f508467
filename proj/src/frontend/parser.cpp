#include <cctype>
#include <set>

#include "core/error.hpp"
#include "frontend/syntax.hpp"

namespace smltt {

namespace {

enum class TK : std::uint8_t { Ident, Num, Str, Sym, End };

struct Token {
  TK kind;
  std::string text;
  unsigned num = 0;
  int line = 1;
  int col = 1;
};

const std::set<std::string> kKeywords = {"def", "axiom", "notation", "import", "fun", "forall", "exists", "let", "in"};
const std::set<std::string> kEliminators = {"J", "ind_Bot", "ind_Top", "ind_Bool", "ind_Ex"};

bool identStart(unsigned char c) { return std::isalpha(c) || c == '_'; }
bool identChar(unsigned char c) { return std::isalnum(c) || c == '_' || c == '\''; }

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1, col = 1;
  auto adv = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < s.size(); ++k) {
      // count columns in code points
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) {
        ++col;
      }
      ++i;
    }
  };
  struct Alias {
    const char* utf8;
    TK kind;
    const char* text;
  };
  static const Alias aliases[] = {
      {"\xE2\x86\x92", TK::Sym, "->"},       // →
      {"\xE2\x89\xA4", TK::Sym, "<="},       // ≤
      {"\xE2\x86\x91", TK::Sym, "^"},        // ↑
      {"\xCE\xBB", TK::Ident, "fun"},        // λ
      {"\xE2\x88\x80", TK::Ident, "forall"}, // ∀
      {"\xE2\x88\x83", TK::Ident, "exists"}, // ∃
      {"\xE2\x8A\xA5", TK::Ident, "Bot"},    // ⊥
      {"\xE2\x8A\xA4", TK::Ident, "Top"},    // ⊤
  };
  static const char* syms[] = {":=", "=>", "->", "**", "<=", "(", ")", "[", "]", ",", ":", ".", "@", "^", "<", "%"};
  while (i < s.size()) {
    unsigned char c = s[i];
    if (c == '\n' || c == ' ' || c == '\t' || c == '\r') {
      adv(1);
      continue;
    }
    if (c == '-' && i + 1 < s.size() && s[i + 1] == '-') {
      while (i < s.size() && s[i] != '\n') adv(1);
      continue;
    }
    Token t{TK::End, "", 0, line, col};
    if (identStart(c)) {
      std::size_t j = i;
      while (j < s.size() && identChar(s[j])) ++j;
      t.kind = TK::Ident;
      t.text = s.substr(i, j - i);
      adv(j - i);
      out.push_back(t);
      continue;
    }
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      t.kind = TK::Num;
      t.text = s.substr(i, j - i);
      if (t.text.size() > 6) throw SmlttError(ErrorKind::SyntaxError, "size literal too large", line, col);
      t.num = static_cast<unsigned>(std::stoul(t.text));
      if (j < s.size() && s[j] == 's' && (j + 1 >= s.size() || !identChar(s[j + 1]))) ++j;
      if (j < s.size() && identChar(s[j]))
        throw SmlttError(ErrorKind::SyntaxError, "malformed number literal", line, col);
      adv(j - i);
      out.push_back(t);
      continue;
    }
    if (c == '"') {
      std::size_t j = i + 1;
      while (j < s.size() && s[j] != '"' && s[j] != '\n') ++j;
      if (j >= s.size() || s[j] != '"') throw SmlttError(ErrorKind::SyntaxError, "unterminated string", line, col);
      t.kind = TK::Str;
      t.text = s.substr(i + 1, j - i - 1);
      adv(j + 1 - i);
      out.push_back(t);
      continue;
    }
    bool matched = false;
    for (const auto& a : aliases) {
      std::size_t n = std::char_traits<char>::length(a.utf8);
      if (s.compare(i, n, a.utf8) == 0) {
        t.kind = a.kind;
        t.text = a.text;
        adv(n);
        out.push_back(t);
        matched = true;
        break;
      }
    }
    if (matched) continue;
    for (const char* sym : syms) {
      std::size_t n = std::char_traits<char>::length(sym);
      if (s.compare(i, n, sym) == 0) {
        t.kind = TK::Sym;
        t.text = sym;
        adv(n);
        out.push_back(t);
        matched = true;
        break;
      }
    }
    if (matched) continue;
    throw SmlttError(ErrorKind::SyntaxError, "unexpected character '" + std::string(1, static_cast<char>(c)) + "'", line, col);
  }
  out.push_back(Token{TK::End, "", 0, line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  std::vector<SurfaceDecl> file() {
    std::vector<SurfaceDecl> out;
    while (!at(TK::End)) out.push_back(decl());
    return out;
  }

  STermP lone() {
    auto e = expr();
    if (!at(TK::End)) error("unexpected " + describe(peek()));
    return e;
  }

 private:
  std::vector<Token> t_;
  std::size_t p_ = 0;

  const Token& peek(std::size_t k = 0) const { return t_[std::min(p_ + k, t_.size() - 1)]; }
  bool at(TK k) const { return peek().kind == k; }
  bool atSym(const char* s, std::size_t k = 0) const { return peek(k).kind == TK::Sym && peek(k).text == s; }
  bool atWord(const char* s) const { return peek().kind == TK::Ident && peek().text == s; }
  bool atName(std::size_t k = 0) const { return peek(k).kind == TK::Ident && !kKeywords.count(peek(k).text); }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case TK::End: return "end of input";
      case TK::Str: return "string \"" + t.text + "\"";
      default: return "'" + t.text + "'";
    }
  }

  [[noreturn]] void error(const std::string& msg) const {
    throw SmlttError(ErrorKind::SyntaxError, msg, peek().line, peek().col);
  }

  void expectSym(const char* s) {
    if (!atSym(s)) error(std::string("expected '") + s + "' but found " + describe(peek()));
    ++p_;
  }

  std::string name() {
    if (!atName()) error("expected a name but found " + describe(peek()));
    return t_[p_++].text;
  }

  std::shared_ptr<STerm> node(SKind k, const Token& at) const {
    auto n = std::make_shared<STerm>();
    n->kind = k;
    n->line = at.line;
    n->col = at.col;
    return n;
  }

  bool declStart() const {
    return atWord("def") || atWord("axiom") || atWord("notation") || atWord("import");
  }

  std::vector<SBinder> binders() {
    std::vector<SBinder> out;
    while (atSym("(")) {
      ++p_;
      SBinder b;
      while (atName()) b.names.push_back(name());
      if (b.names.empty()) error("expected binder names");
      expectSym(":");
      b.type = expr();
      expectSym(")");
      out.push_back(std::move(b));
    }
    return out;
  }

  SurfaceDecl decl() {
    SurfaceDecl d;
    const Token& start = peek();
    d.line = start.line;
    d.col = start.col;
    if (atWord("import")) {
      ++p_;
      if (!at(TK::Str)) error("expected a quoted path after import");
      d.kind = SDeclKind::Import;
      d.path = t_[p_++].text;
      return d;
    }
    if (atWord("def")) {
      d.kind = SDeclKind::Def;
    } else if (atWord("axiom")) {
      d.kind = SDeclKind::Axiom;
    } else if (atWord("notation")) {
      d.kind = SDeclKind::Notation;
    } else {
      error("expected a declaration but found " + describe(peek()));
    }
    ++p_;
    d.name = name();
    d.binders = binders();
    if (d.kind == SDeclKind::Notation) {
      expectSym(":=");
      d.body = expr();
    } else if (d.kind == SDeclKind::Axiom) {
      expectSym(":");
      d.type = expr();
    } else {
      if (atSym(":")) {
        ++p_;
        d.type = expr();
      }
      if (!atSym(":=")) {
        if (d.type) error("definition " + d.name + " needs a body (forward declarations are not allowed)");
        error("expected ':=' but found " + describe(peek()));
      }
      ++p_;
      d.body = expr();
    }
    if (!at(TK::End) && !declStart()) error("unexpected " + describe(peek()) + " after declaration");
    return d;
  }

  STermP expr() {
    const Token& start = peek();
    if (atWord("fun")) {
      ++p_;
      auto n = node(SKind::Lam, start);
      if (atSym("^")) {
        ++p_;
        n->kind = SKind::ForLam;
      }
      while (atName()) n->binders.push_back(name());
      if (n->binders.empty()) error("expected binder names after fun");
      expectSym("=>");
      n->kids.push_back(expr());
      return n;
    }
    if (atWord("let")) {
      ++p_;
      auto n = node(SKind::Let, start);
      n->binders.push_back(name());
      expectSym(":=");
      n->kids.push_back(expr());
      if (!atWord("in")) error("expected 'in' but found " + describe(peek()));
      ++p_;
      n->kids.push_back(expr());
      return n;
    }
    if (atWord("forall") || atWord("exists")) {
      auto n = node(atWord("forall") ? SKind::Forall : SKind::Exists, start);
      ++p_;
      while (atName()) n->binders.push_back(name());
      if (n->binders.empty()) error("expected a size variable after quantifier");
      if (atSym("<")) {
        ++p_;
        n->kids.push_back(app());
      }
      expectSym(".");
      n->kids.push_back(expr());
      return n;
    }
    auto left = sigma();
    if (atSym("->")) {
      ++p_;
      auto n = node(SKind::Pi, start);
      n->kids = {left, expr()};
      return n;
    }
    return left;
  }

  // "(x y : A) (z : B) -> C" or "(x : A) ** B"; backtracks when no arrow follows.
  STermP tryBinderGroups() {
    if (!atSym("(")) return nullptr;
    std::size_t save = p_;
    std::vector<std::pair<std::vector<std::string>, STermP>> groups;
    std::vector<Token> starts;
    while (atSym("(")) {
      std::size_t k = 1;
      while (atName(k)) ++k;
      if (k == 1 || !atSym(":", k)) break;
      starts.push_back(peek());
      ++p_;
      std::vector<std::string> names;
      while (atName()) names.push_back(name());
      ++p_;  // ':'
      STermP ty;
      try {
        ty = expr();
      } catch (const SmlttError&) {
        p_ = save;
        return nullptr;
      }
      if (!atSym(")")) {
        p_ = save;
        return nullptr;
      }
      ++p_;
      groups.emplace_back(std::move(names), std::move(ty));
    }
    bool arrow = atSym("->");
    bool prod = atSym("**");
    if (groups.empty() || !(arrow || prod) || (prod && groups.size() > 1)) {
      p_ = save;
      return nullptr;
    }
    ++p_;
    STermP body = arrow ? expr() : sigmaRight();
    for (std::size_t g = groups.size(); g-- > 0;) {
      auto n = node(arrow ? SKind::Pi : SKind::Sigma, starts[g]);
      n->binders = groups[g].first;
      n->kids = {groups[g].second, body};
      body = n;
    }
    return body;
  }

  STermP sigma() {
    const Token& start = peek();
    if (auto b = tryBinderGroups()) return b;
    auto left = cmp();
    if (atSym("**")) {
      ++p_;
      auto n = node(SKind::Sigma, start);
      n->kids = {left, sigmaRight()};
      return n;
    }
    return left;
  }

  // a binder form may close off the right end of a product
  STermP sigmaRight() {
    if (atWord("fun") || atWord("forall") || atWord("exists") || atWord("let")) return expr();
    return sigma();
  }

  STermP cmp() {
    const Token& start = peek();
    auto left = app();
    if (atSym("<=") || atSym("<")) {
      auto n = node(atSym("<=") ? SKind::Leq : SKind::Lt, start);
      ++p_;
      n->kids = {left, app()};
      return n;
    }
    return left;
  }

  bool atomStart() const {
    return atName() || at(TK::Num) || atSym("(") || atSym("[") || atSym("^") || atSym("%");
  }

  STermP app() {
    const Token& start = peek();
    if (!atomStart()) error("expected a term but found " + describe(peek()));
    STermP head = atom();
    for (;;) {
      if (atSym("@")) {
        ++p_;
        auto n = node(SKind::ForApp, start);
        n->kids = {head, atom()};
        head = n;
      } else if (atomStart()) {
        auto n = node(SKind::App, start);
        n->kids = {head, atom()};
        head = n;
      } else {
        return head;
      }
    }
  }

  STermP elim(const Token& start) {
    auto n = node(SKind::Elim, start);
    n->name = start.text;
    ++p_;
    int groups = n->name == "J" ? 2 : n->name == "ind_Ex" ? 2 : 1;
    for (int g = 0; g < groups; ++g) {
      expectSym("(");
      std::vector<std::string> names;
      while (atName()) names.push_back(name());
      expectSym(".");
      n->groups.push_back(std::move(names));
      n->kids.push_back(expr());
      expectSym(")");
    }
    return n;
  }

  STermP atom() {
    const Token& start = peek();
    if (atName()) {
      if (kEliminators.count(start.text)) return elim(start);
      auto n = node(SKind::Ident, start);
      n->name = start.text;
      ++p_;
      return n;
    }
    if (at(TK::Num)) {
      auto n = node(SKind::Num, start);
      n->num = start.num;
      ++p_;
      return n;
    }
    if (atSym("^")) {
      ++p_;
      auto n = node(SKind::Suc, start);
      n->kids = {atom()};
      return n;
    }
    if (atSym("%")) {
      ++p_;
      SKind k;
      if (atWord("type")) {
        k = SKind::ForceType;
      } else if (atWord("term")) {
        k = SKind::ForceTerm;
      } else {
        error("expected %type or %term");
      }
      ++p_;
      expectSym("(");
      auto n = node(k, start);
      n->kids = {expr()};
      expectSym(")");
      return n;
    }
    if (atSym("[")) {
      ++p_;
      auto n = node(SKind::ExPair, start);
      auto s = expr();
      expectSym(",");
      auto a = expr();
      expectSym("]");
      n->kids = {s, a};
      return n;
    }
    if (atSym("(")) {
      ++p_;
      auto e = expr();
      if (atSym(")")) {
        ++p_;
        return e;
      }
      if (atSym(":")) {
        ++p_;
        auto n = node(SKind::Ann, start);
        n->kids = {e, expr()};
        expectSym(")");
        return n;
      }
      if (atSym(",")) {
        std::vector<STermP> items{e};
        while (atSym(",")) {
          ++p_;
          items.push_back(expr());
        }
        expectSym(")");
        STermP acc = items.back();
        for (std::size_t k = items.size() - 1; k-- > 0;) {
          auto n = node(SKind::Pair, start);
          n->kids = {items[k], acc};
          acc = n;
        }
        return acc;
      }
      error("expected ')' but found " + describe(peek()));
    }
    error("expected a term but found " + describe(peek()));
  }
};

}  // namespace

std::vector<SurfaceDecl> parse(const std::string& text) { return Parser(lex(text)).file(); }

STermP parseTerm(const std::string& text) { return Parser(lex(text)).lone(); }

}  // namespace smltt
