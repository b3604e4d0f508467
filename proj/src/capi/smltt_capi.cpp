#include "smltt/smltt.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "corpus/session.hpp"
#include "frontend/printer.hpp"
#include "nbe/nbe.hpp"
#include "model/vectors.hpp"

namespace fs = std::filesystem;

struct smltt_session {
  explicit smltt_session(const std::string& prelude) : session(prelude) {}
  smltt::Session session;
  std::vector<smltt::Diagnostic> diags;
  std::vector<std::string> kindNames;
  std::vector<std::string> summary;
  std::string lastError;
};

namespace {

using smltt::Diagnostic;
using smltt::ErrorKind;
using smltt::SmlttError;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

smltt_status statusFor(const std::vector<Diagnostic>& ds) {
  switch (smltt::exitCodeFor(ds)) {
    case 0: return SMLTT_OK;
    case 2: return SMLTT_PARSE_ERROR;
    case 3: return SMLTT_IO_ERROR;
    default: return SMLTT_CHECK_FAILED;
  }
}

void setDiags(smltt_session* s, std::vector<Diagnostic> ds) {
  s->diags = std::move(ds);
  s->kindNames.clear();
  for (const auto& d : s->diags) s->kindNames.emplace_back(smltt::errorKindName(d.kind));
  s->lastError = s->diags.empty() ? "" : s->diags.front().message;
}

smltt_status fail(smltt_session* s, const SmlttError& e) {
  setDiags(s, {e.diag});
  return statusFor(s->diags);
}

std::string fmtSeconds(double x) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << x << "s";
  return o.str();
}

// Loads <stdlib>/<stem>.smltt when a query names a stem not yet loaded.
smltt_status ensureStem(smltt_session* s, const std::string& query) {
  auto dot = query.rfind('.');
  if (dot == std::string::npos) {
    auto pre = s->session.loadPrelude();
    if (!pre.ok) {
      setDiags(s, pre.diagnostics);
      return statusFor(s->diags);
    }
    return SMLTT_OK;
  }
  std::string stem = query.substr(0, dot);
  for (const auto& r : s->session.records())
    if (r.stem == stem) return SMLTT_OK;
  fs::path dir = fs::path(smltt::defaultPreludePath()).parent_path();
  if (const char* env = std::getenv("SMLTT_STDLIB"); env && *env) dir = env;
  fs::path file = dir / (stem + ".smltt");
  std::error_code ec;
  if (!fs::exists(file, ec)) return SMLTT_OK;  // resolve reports the unknown name
  auto rep = s->session.checkFile(file.string());
  if (!rep.ok) {
    setDiags(s, rep.diagnostics);
    return statusFor(s->diags);
  }
  return SMLTT_OK;
}

template <class F>
smltt_status guarded(smltt_session* s, F&& f) {
  try {
    return f();
  } catch (const SmlttError& e) {
    return fail(s, e);
  } catch (const smltt::EvalError& e) {
    setDiags(s, {Diagnostic{ErrorKind::TypeMismatch, e.what()}});
    return SMLTT_CHECK_FAILED;
  } catch (const std::exception& e) {
    s->lastError = e.what();
    return SMLTT_INTERNAL_ERROR;
  }
}

}  // namespace

extern "C" {

smltt_session* smltt_session_new(const char* prelude_path) {
  try {
    return new smltt_session(prelude_path ? prelude_path : "");
  } catch (...) {
    return nullptr;
  }
}

void smltt_session_free(smltt_session* s) { delete s; }

smltt_status smltt_check_path(smltt_session* s, const char* path, int allow_axioms) {
  if (!s || !path) return SMLTT_INVALID_ARGUMENT;
  return guarded(s, [&] {
    s->summary.clear();
    smltt::CheckReport rep = s->session.checkCorpus(path, allow_axioms != 0);
    for (const auto& f : rep.files) {
      std::string line = (f.ok ? "ok   " : "FAIL ") + f.path;
      if (f.ok) line += "  (" + std::to_string(f.decls.size()) + " declarations, " + fmtSeconds(f.seconds) + ")";
      s->summary.push_back(line);
    }
    for (const auto& [file, axioms] : rep.axiomsByFile) {
      std::string line = "axioms " + file + ":";
      if (axioms.empty()) line += " none";
      for (const auto& a : axioms) line += " " + a;
      s->summary.push_back(line);
    }
    setDiags(s, rep.diagnostics());
    return statusFor(s->diags);
  });
}

size_t smltt_diagnostic_count(const smltt_session* s) { return s ? s->diags.size() : 0; }

smltt_status smltt_diagnostic_get(const smltt_session* s, size_t i, smltt_diagnostic* out) {
  if (!s || !out || i >= s->diags.size()) return SMLTT_INVALID_ARGUMENT;
  const Diagnostic& d = s->diags[i];
  out->kind = s->kindNames[i].c_str();
  out->message = d.message.c_str();
  out->file = d.file.c_str();
  out->decl = d.decl.c_str();
  out->line = d.line;
  out->col = d.col;
  return SMLTT_OK;
}

smltt_status smltt_diagnostics_json(const smltt_session* s, char** out) {
  if (!s || !out) return SMLTT_INVALID_ARGUMENT;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& d : s->diags)
    arr.push_back({{"file", d.file},
                   {"decl", d.decl},
                   {"kind", smltt::errorKindName(d.kind)},
                   {"message", d.message},
                   {"span", {{"line", d.line}, {"col", d.col}}}});
  *out = dup(arr.dump());
  return SMLTT_OK;
}

smltt_status smltt_check_summary(const smltt_session* s, char** out) {
  if (!s || !out) return SMLTT_INVALID_ARGUMENT;
  std::string text;
  for (const auto& l : s->summary) text += l + "\n";
  *out = dup(text);
  return SMLTT_OK;
}

smltt_status smltt_query_type(smltt_session* s, const char* name, int unfold, char** out) {
  if (!s || !name || !out) return SMLTT_INVALID_ARGUMENT;
  return guarded(s, [&] {
    setDiags(s, {});
    if (auto st = ensureStem(s, name); st != SMLTT_OK) return st;
    std::string n = s->session.resolve(name);
    smltt::TermP ty = s->session.typeTerm(n);
    smltt::Env env;
    env.globals = &s->session.kernel().globals();
    smltt::TermP nf = smltt::readback(0, smltt::eval(env, ty), {unfold != 0});
    *out = dup(smltt::printType(nf));
    return SMLTT_OK;
  });
}

smltt_status smltt_normalize(smltt_session* s, const char* text, int unfold, char** out) {
  if (!s || !text || !out) return SMLTT_INVALID_ARGUMENT;
  return guarded(s, [&] {
    setDiags(s, {});
    std::string q = text;
    if (auto st = ensureStem(s, q); st != SMLTT_OK) return st;
    smltt::TermP t;
    try {
      std::string n = s->session.resolve(q);
      t = s->session.bodyTerm(n);
      if (!t) throw SmlttError(ErrorKind::CannotInfer, n + " is an axiom and has no body");
    } catch (const SmlttError& e) {
      if (e.kind() != ErrorKind::UnknownName) throw;
      t = s->session.elaborateText(q, smltt::Mode::Term);
    }
    smltt::Env env;
    env.globals = &s->session.kernel().globals();
    smltt::TermP nf = smltt::readback(0, smltt::eval(env, t), {unfold != 0});
    *out = dup(smltt::printTerm(nf));
    return SMLTT_OK;
  });
}

smltt_status smltt_axioms(smltt_session* s, const char* name, char** out) {
  if (!s || !name || !out) return SMLTT_INVALID_ARGUMENT;
  return guarded(s, [&] {
    setDiags(s, {});
    if (auto st = ensureStem(s, name); st != SMLTT_OK) return st;
    std::string n = s->session.resolve(name);
    std::string text;
    for (const auto& a : s->session.kernel().usedAxioms(n)) text += a + "\n";
    *out = dup(text);
    return SMLTT_OK;
  });
}

smltt_status smltt_model_test(const char* path, int64_t fuel, char** report) {
  if (!path || !report) return SMLTT_INVALID_ARGUMENT;
  *report = nullptr;
  std::ifstream in(path);
  if (!in) {
    *report = dup(std::string("cannot read ") + path + "\n");
    return SMLTT_IO_ERROR;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    std::optional<std::uint64_t> override;
    if (fuel >= 0) override = static_cast<std::uint64_t>(fuel);
    auto run = smltt::model::runVectors(buf.str(), override);
    std::string text;
    for (const auto& r : run.results) {
      text += (r.pass ? "pass " : "FAIL ") + std::string("line ") + std::to_string(r.line) + ": " + r.text;
      if (!r.detail.empty()) text += "  [" + r.detail + "]";
      text += "\n";
    }
    *report = dup(text);
    return run.allPass() ? SMLTT_OK : SMLTT_CHECK_FAILED;
  } catch (const SmlttError& e) {
    *report = dup(std::string(e.what()) + "\n");
    return SMLTT_PARSE_ERROR;
  } catch (const std::exception& e) {
    *report = dup(std::string(e.what()) + "\n");
    return SMLTT_INTERNAL_ERROR;
  }
}

void smltt_string_free(char* p) { std::free(p); }

const char* smltt_last_error(const smltt_session* s) { return s ? s->lastError.c_str() : ""; }

const char* smltt_status_name(smltt_status st) {
  switch (st) {
    case SMLTT_OK: return "ok";
    case SMLTT_CHECK_FAILED: return "check failed";
    case SMLTT_PARSE_ERROR: return "parse error";
    case SMLTT_IO_ERROR: return "i/o error";
    case SMLTT_INVALID_ARGUMENT: return "invalid argument";
    case SMLTT_INTERNAL_ERROR: return "internal error";
  }
  return "unknown";
}

}  // extern "C"
