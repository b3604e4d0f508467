#include "corpus/session.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "frontend/printer.hpp"
#include "frontend/syntax.hpp"

namespace fs = std::filesystem;

namespace smltt {

namespace {

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string canonical(const std::string& p) {
  std::error_code ec;
  auto c = fs::weakly_canonical(fs::path(p), ec);
  return ec ? p : c.string();
}

Diagnostic diagAt(const SmlttError& e, const std::string& file, const std::string& decl, int line, int col) {
  Diagnostic d = e.diag;
  d.file = file;
  d.decl = decl;
  if (d.line == 0) {
    d.line = line;
    d.col = col;
  }
  return d;
}

}  // namespace

bool CheckReport::ok() const {
  if (!audit.empty()) return false;
  return std::all_of(files.begin(), files.end(), [](const FileReport& f) { return f.ok; });
}

std::vector<Diagnostic> CheckReport::diagnostics() const {
  std::vector<Diagnostic> out;
  for (const auto& f : files) out.insert(out.end(), f.diagnostics.begin(), f.diagnostics.end());
  out.insert(out.end(), audit.begin(), audit.end());
  return out;
}

int exitCodeFor(const std::vector<Diagnostic>& diags) {
  int code = 0;
  for (const auto& d : diags) {
    int c = d.kind == ErrorKind::IoError ? 3 : isFrontendError(d.kind) ? 2 : 1;
    code = std::max(code, c);
  }
  return code;
}

std::string defaultPreludePath() {
  if (const char* env = std::getenv("SMLTT_PRELUDE"); env && *env) return env;
  return std::string(SMLTT_STDLIB_DIR) + "/prelude.smltt";
}

std::vector<ManifestEntry> readManifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SmlttError(ErrorKind::IoError, "cannot read manifest " + path);
  std::vector<ManifestEntry> out;
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ss(line);
    ManifestEntry e;
    if (!(ss >> e.path)) continue;
    if (!(ss >> e.tier) || (e.tier != "definitions" && e.tier != "theorems"))
      throw SmlttError(ErrorKind::SyntaxError, "manifest line needs a tier (definitions or theorems)", lineNo, 1);
    std::string ax;
    while (ss >> ax)
      if (ax != "-") e.expectedAxioms.insert(ax);
    out.push_back(std::move(e));
  }
  return out;
}

Session::Session(std::string preludePath)
    : preludePath_(preludePath.empty() ? defaultPreludePath() : std::move(preludePath)) {}

Scope Session::scope() const {
  Scope s;
  s.notations = &notations_;
  const GlobalTable* g = &kernel_.globals();
  s.isGlobal = [g](const std::string& n) { return g->find(n) != nullptr; };
  return s;
}

FileReport Session::loadPrelude() {
  if (preludeLoaded_) return loaded_[canonical(preludePath_)];
  preludeLoaded_ = true;
  std::vector<std::string> stack;
  return checkFileImpl(preludePath_, true, false, stack);
}

FileReport Session::checkFile(const std::string& path, bool allowAxioms) {
  FileReport pre = loadPrelude();
  if (!pre.ok) return pre;
  std::vector<std::string> stack;
  return checkFileImpl(path, false, allowAxioms, stack);
}

void Session::checkDecl(const SurfaceDecl& d, const std::string& file, bool trusted) {
  if (notations_.count(d.name) || kernel_.globals().find(d.name))
    throw SmlttError(ErrorKind::DuplicateName, "duplicate declaration of " + d.name);
  if (d.kind == SDeclKind::Notation) {
    notations_[d.name] = makeNotation(d);
    return;
  }
  ElabDecl ed = elaborateDecl(d, scope());
  TermP type = ed.type;
  if (!type) {
    Ctx ctx = kernel_.emptyCtx();
    for (std::size_t k = 0; k < ed.binderTypes.size(); ++k) {
      kernel_.checkType(ctx, ed.binderTypes[k]);
      ctx = ctx.bind(ed.binderNames[k], eval(ctx.env, ed.binderTypes[k]));
    }
    V ty = kernel_.infer(ctx, ed.innerBody);
    type = readback(ctx.depth(), ty);
    for (std::size_t k = ed.binderTypes.size(); k-- > 0;) type = mk::pi(ed.binderTypes[k], type);
  }
  TopLevelDecl td{ed.name, type, ed.body, ed.kind};
  kernel_.checkDecl(td, trusted, file);
  DeclRecord r;
  r.name = d.name;
  r.file = file;
  r.stem = fs::path(file).stem().string();
  r.line = d.line;
  r.isAxiom = ed.kind == DeclKind::Axiom;
  recordIndex_[r.name] = records_.size();
  records_.push_back(std::move(r));
}

FileReport Session::checkFileImpl(const std::string& path, bool trusted, bool allowAxioms,
                                  std::vector<std::string>& stack) {
  auto t0 = std::chrono::steady_clock::now();
  const std::string key = canonical(path);
  if (auto it = loaded_.find(key); it != loaded_.end()) return it->second;
  FileReport rep;
  rep.path = path;
  auto failWith = [&](Diagnostic d) {
    rep.ok = false;
    rep.diagnostics.push_back(std::move(d));
    rep.seconds = since(t0);
    loaded_[key] = rep;
    return rep;
  };
  if (std::find(stack.begin(), stack.end(), key) != stack.end()) {
    Diagnostic d{ErrorKind::SyntaxError, "import cycle through " + path, path, "", 0, 0};
    rep.ok = false;
    rep.diagnostics.push_back(d);
    return rep;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in || fs::is_directory(path)) return failWith({ErrorKind::IoError, "cannot read " + path, path, "", 0, 0});
  std::stringstream buf;
  buf << in.rdbuf();

  std::vector<SurfaceDecl> decls;
  try {
    decls = parse(buf.str());
  } catch (const SmlttError& e) {
    return failWith(diagAt(e, path, "", 0, 0));
  }
  stack.push_back(key);
  const std::string preludeKey = canonical(preludePath_);
  for (const auto& d : decls) {
    if (d.kind == SDeclKind::Import) {
      fs::path target = fs::path(path).parent_path() / d.path;
      if (canonical(target.string()) == preludeKey) continue;
      FileReport sub = checkFileImpl(target.string(), trusted, allowAxioms, stack);
      if (!sub.ok) {
        stack.pop_back();
        rep.ok = false;
        rep.diagnostics = sub.diagnostics;
        if (sub.diagnostics.size() == 1 && sub.diagnostics[0].kind == ErrorKind::IoError) {
          rep.diagnostics[0].file = path;
          rep.diagnostics[0].line = d.line;
          rep.diagnostics[0].col = d.col;
          rep.diagnostics[0].message = "cannot import \"" + d.path + "\": " + sub.diagnostics[0].message;
        }
        rep.seconds = since(t0);
        loaded_[key] = rep;
        return rep;
      }
      continue;
    }
    try {
      checkDecl(d, path, trusted || allowAxioms);
      rep.decls.push_back(d.name);
    } catch (const SmlttError& e) {
      stack.pop_back();
      return failWith(diagAt(e, path, d.name, d.line, d.col));
    } catch (const EvalError& e) {
      stack.pop_back();
      return failWith({ErrorKind::TypeMismatch, e.what(), path, d.name, d.line, d.col});
    }
  }
  stack.pop_back();
  rep.seconds = since(t0);
  loaded_[key] = rep;
  return rep;
}

// Every import of a listed file must itself be listed earlier.
std::optional<Diagnostic> Session::manifestOrder(const std::vector<ManifestEntry>& entries, const fs::path& base,
                                                 const std::string& manifestPath) const {
  std::set<std::string> seen;
  const std::string preludeKey = canonical(preludePath_);
  for (const auto& e : entries) {
    fs::path p = base / e.path;
    std::ifstream in(p, std::ios::binary);
    if (in) {
      std::stringstream buf;
      buf << in.rdbuf();
      std::vector<SurfaceDecl> decls;
      try {
        decls = parse(buf.str());
      } catch (const SmlttError&) {
        decls.clear();  // reported when the file is checked
      }
      for (const auto& d : decls) {
        if (d.kind != SDeclKind::Import) continue;
        std::string key = canonical((p.parent_path() / d.path).string());
        if (key == preludeKey || seen.count(key)) continue;
        return Diagnostic{ErrorKind::SyntaxError, e.path + " imports \"" + d.path + "\" which the manifest does not list before it",
                          manifestPath, "", 0, 0};
      }
    }
    seen.insert(canonical(p.string()));
  }
  return std::nullopt;
}

CheckReport Session::checkCorpus(const std::string& where, bool allowAxioms) {
  auto t0 = std::chrono::steady_clock::now();
  CheckReport out;
  FileReport pre = loadPrelude();
  if (!pre.ok) {
    out.files.push_back(pre);
    return out;
  }
  std::vector<ManifestEntry> entries;
  fs::path base;
  std::error_code ec;
  if (fs::is_directory(where, ec)) {
    base = where;
    if (fs::exists(base / "MANIFEST")) {
      try {
        entries = readManifest((base / "MANIFEST").string());
      } catch (const SmlttError& e) {
        out.audit.push_back(diagAt(e, (base / "MANIFEST").string(), "", 0, 0));
        return out;
      }
    } else {
      std::vector<std::string> files;
      for (const auto& f : fs::directory_iterator(base))
        if (f.path().extension() == ".smltt" && canonical(f.path().string()) != canonical(preludePath_))
          files.push_back(f.path().filename().string());
      std::sort(files.begin(), files.end());
      for (auto& f : files) entries.push_back({f, "theorems", {}});
    }
  } else {
    if (!fs::exists(where, ec) || fs::path(where).extension() == ".smltt") {
      out.files.push_back(checkFile(where, allowAxioms));
      if (out.files.back().ok) {
        auto& ax = out.axiomsByFile[where];
        for (const auto& d : out.files.back().decls) {
          if (notations_.count(d)) continue;
          auto used = kernel_.usedAxioms(d);
          ax.insert(used.begin(), used.end());
        }
      }
      return out;
    }
    base = fs::path(where).parent_path();
    try {
      entries = readManifest(where);
    } catch (const SmlttError& e) {
      out.audit.push_back(diagAt(e, where, "", 0, 0));
      return out;
    }
  }
  bool hasManifest = fs::exists(base / "MANIFEST") || !fs::is_directory(where, ec);
  if (hasManifest) {
    std::string manifestPath = fs::is_directory(where, ec) ? (base / "MANIFEST").string() : where;
    if (auto d = manifestOrder(entries, base, manifestPath)) {
      out.audit.push_back(*d);
      return out;
    }
  }
  for (const auto& e : entries) {
    std::string p = (base / e.path).string();
    FileReport r = checkFile(p, allowAxioms);
    out.files.push_back(r);
    if (!r.ok) continue;
    std::set<std::string> used;
    for (const auto& d : r.decls) {
      if (notations_.count(d)) continue;
      auto a = kernel_.usedAxioms(d);
      used.insert(a.begin(), a.end());
    }
    out.axiomsByFile[e.path] = used;
    if (!hasManifest) continue;
    std::vector<std::string> extra;
    for (const auto& a : used)
      if (!e.expectedAxioms.count(a)) extra.push_back(a);
    if (!extra.empty()) {
      std::string msg = "uses axioms outside its declared set:";
      for (const auto& a : extra) msg += " " + a;
      out.audit.push_back({ErrorKind::AxiomAudit, msg, p, "", 0, 0});
    }
  }
  out.seconds = since(t0);
  return out;
}

std::string Session::resolve(const std::string& query) const {
  auto dot = query.rfind('.');
  if (dot != std::string::npos) {
    std::string stem = query.substr(0, dot);
    std::string name = query.substr(dot + 1);
    auto r = record(name);
    if (!r || r->stem != stem) throw SmlttError(ErrorKind::UnknownName, "unknown name " + query);
    return name;
  }
  if (!kernel_.globals().find(query)) throw SmlttError(ErrorKind::UnknownName, "unknown name " + query);
  return query;
}

std::optional<DeclRecord> Session::record(const std::string& name) const {
  auto it = recordIndex_.find(name);
  if (it == recordIndex_.end()) return std::nullopt;
  return records_[it->second];
}

TermP Session::typeTerm(const std::string& name) const {
  auto g = kernel_.globals().find(name);
  if (!g) throw SmlttError(ErrorKind::UnknownName, "unknown name " + name);
  if (!g->typeTerm) throw SmlttError(ErrorKind::CannotInfer, name + " has a schematic type");
  return g->typeTerm;
}

TermP Session::bodyTerm(const std::string& name) const {
  auto g = kernel_.globals().find(name);
  if (!g) throw SmlttError(ErrorKind::UnknownName, "unknown name " + name);
  return g->body;
}

TermP Session::elaborateText(const std::string& text, Mode mode) const {
  return elaborate(parseTerm(text), scope(), mode);
}

std::string Session::printType(const TermP& t) const { return smltt::printType(t); }

}  // namespace smltt
