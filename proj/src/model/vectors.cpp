#include "model/vectors.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "core/error.hpp"
#include "model/assembly.hpp"
#include "model/pca.hpp"

namespace smltt::model {

bool VectorRun::allPass() const {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

namespace {

[[noreturn]] void malformed(int line, const std::string& msg) {
  throw SmlttError(ErrorKind::SyntaxError, "vector line " + std::to_string(line) + ": " + msg, line, 0);
}

// Splits a line into top-level fields: words or balanced parentheses.
std::vector<std::string> fields(const std::string& s, int line) {
  std::vector<std::string> out;
  std::size_t p = 0;
  while (p < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[p]))) {
      ++p;
      continue;
    }
    std::size_t start = p;
    if (s[p] == '(') {
      int depth = 0;
      do {
        if (s[p] == '(') ++depth;
        else if (s[p] == ')') --depth;
        ++p;
      } while (p < s.size() && depth > 0);
      if (depth != 0) malformed(line, "unbalanced parentheses");
    } else if (s[p] == ')') {
      malformed(line, "unexpected ')'");
    } else {
      while (p < s.size() && !std::isspace(static_cast<unsigned char>(s[p])) && s[p] != '(' && s[p] != ')') ++p;
    }
    out.push_back(s.substr(start, p - start));
  }
  return out;
}

std::vector<std::string> listItems(const std::string& s, int line) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') malformed(line, "expected a list, got " + s);
  return fields(s.substr(1, s.size() - 2), line);
}

std::uint64_t number(const std::string& s, int line) {
  if (s.empty()) malformed(line, "expected a number");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) malformed(line, "expected a number, got " + s);
  return std::stoull(s);
}

ClP term(const std::string& s, int line) {
  try {
    return parseCl(s);
  } catch (const SmlttError& e) {
    malformed(line, e.what());
  }
}

FiniteAssembly assembly(const std::string& s, int line, std::map<std::string, int>& index) {
  FiniteAssembly a;
  for (const auto& item : listItems(s, line)) {
    auto parts = listItems(item, line);
    if (parts.size() < 2) malformed(line, "element without realisers: " + item);
    int x = static_cast<int>(a.carrier.size());
    if (index.count(parts[0])) malformed(line, "duplicate element " + parts[0]);
    index[parts[0]] = x;
    a.carrier.push_back(parts[0]);
    for (std::size_t k = 1; k < parts.size(); ++k) a.realises.emplace_back(term(parts[k], line), x);
  }
  if (!a.valid()) malformed(line, "not an assembly");
  return a;
}

VectorResult runLine(const std::vector<std::string>& f, int line, std::optional<std::uint64_t> fuelOverride, bool execute) {
  VectorResult r;
  r.line = line;
  auto fuel = [&](const std::string& s) { return fuelOverride ? *fuelOverride : number(s, line); };
  const std::string& cmd = f[0];
  if (cmd == "fixlaw") {
    if (f.size() != 4) malformed(line, "fixlaw expects <f> <a> <fuel>");
    ClP fn = term(f[1], line), a = term(f[2], line);
    std::uint64_t n = fuel(f[3]);
    if (execute) r.pass = checkFixLaw(fn, a, n);
  } else if (cmd == "phi") {
    if (f.size() != 5) malformed(line, "phi expects <fr> <gr> <n> <fuel>");
    ClP fr = term(f[1], line), gr = term(f[2], line), n = term(f[3], line);
    std::uint64_t fl = fuel(f[4]);
    if (execute) r.pass = checkPhiLaw(fr, gr, n, fl);
  } else if (cmd == "track") {
    if (f.size() != 6) malformed(line, "track expects <asmA> <asmB> <table> <tracker> <fuel>");
    std::map<std::string, int> ia, ib;
    FiniteAssembly a = assembly(f[1], line, ia);
    FiniteAssembly b = assembly(f[2], line, ib);
    TrackedMorphism m;
    m.table.assign(a.carrier.size(), -1);
    for (const auto& pair : listItems(f[3], line)) {
      auto xy = listItems(pair, line);
      if (xy.size() != 2 || !ia.count(xy[0]) || !ib.count(xy[1])) malformed(line, "bad table entry " + pair);
      m.table[static_cast<std::size_t>(ia[xy[0]])] = ib[xy[1]];
    }
    for (int y : m.table)
      if (y < 0) malformed(line, "table is not total");
    m.tracker = term(f[4], line);
    m.fuel = fuel(f[5]);
    if (execute) r.pass = checkTracking(a, b, m);
  } else if (cmd == "truncate") {
    if (f.size() != 3) malformed(line, "truncate expects <asm> <classes>");
    std::map<std::string, int> ia;
    FiniteAssembly a = assembly(f[1], line, ia);
    Truncation t = truncateM(a);
    std::uint64_t want = number(f[2], line);
    r.pass = t.quotient.carrier.size() == want && t.quotient.modest() && t.per.valid();
    r.detail = std::to_string(t.quotient.carrier.size()) + " classes";
  } else if (cmd == "universal") {
    if (f.size() != 3) malformed(line, "universal expects <max-elements> <tokens>");
    auto n = number(f[1], line), k = number(f[2], line);
    if (n > 3 || k > 4 || n == 0 || k == 0) malformed(line, "universal bounds out of range");
    if (!execute) return r;
    UniversalReport u = checkUniversalProperty(static_cast<int>(n), static_cast<int>(k));
    r.pass = u.failures == 0 && u.notModest == 0 && u.etaUntracked == 0;
    r.detail = std::to_string(u.assemblies) + " assemblies, " + std::to_string(u.morphisms) + " morphisms";
  } else {
    malformed(line, "unknown check " + cmd);
  }
  return r;
}

}  // namespace

VectorRun runVectors(const std::string& text, std::optional<std::uint64_t> fuelOverride) {
  VectorRun run;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  std::vector<std::pair<int, std::vector<std::string>>> parsed;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    std::string s = hash == std::string::npos ? raw : raw.substr(0, hash);
    auto f = fields(s, line);
    if (f.empty()) continue;
    parsed.emplace_back(line, f);
  }
  // the whole file is validated before anything runs
  for (const auto& [ln, f] : parsed) runLine(f, ln, fuelOverride, false);
  for (const auto& [ln, f] : parsed) {
    VectorResult r = runLine(f, ln, fuelOverride, true);
    std::string joined;
    for (const auto& x : f) joined += (joined.empty() ? "" : " ") + x;
    r.text = joined;
    run.results.push_back(std::move(r));
  }
  return run;
}

}  // namespace smltt::model
