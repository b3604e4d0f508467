// smltt: batch driver over the C API.
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "smltt/smltt.h"

namespace {

struct Owned {
  char* p = nullptr;
  ~Owned() { smltt_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

int code(smltt_status st) {
  switch (st) {
    case SMLTT_OK: return 0;
    case SMLTT_PARSE_ERROR: return 2;
    case SMLTT_IO_ERROR: return 3;
    default: return 1;
  }
}

void printDiagnostics(smltt_session* s, bool json) {
  if (json) {
    Owned j;
    smltt_diagnostics_json(s, &j.p);
    std::cout << j.str() << "\n";
    return;
  }
  for (size_t i = 0; i < smltt_diagnostic_count(s); ++i) {
    smltt_diagnostic d;
    smltt_diagnostic_get(s, i, &d);
    std::string where = *d.file ? d.file : "<input>";
    if (d.line > 0) where += ":" + std::to_string(d.line) + ":" + std::to_string(d.col);
    std::cerr << where << ": " << d.kind;
    if (*d.decl) std::cerr << " in " << d.decl;
    std::cerr << ": " << d.message << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"smltt: checker and model oracle for the sized modal type theory"};
  app.require_subcommand(1, 1);

  std::string prelude;
  bool json = false;
  app.add_option("--prelude", prelude, "prelude file (defaults to the bundled one)");
  app.add_flag("--json-diagnostics", json, "print diagnostics as JSON on stdout");

  std::vector<std::string> paths;
  bool allowAxioms = false;
  auto* check = app.add_subcommand("check", "check files, directories or manifests");
  check->add_option("paths", paths, "files or directories")->required();
  check->add_flag("--allow-axioms", allowAxioms, "permit axiom declarations outside the prelude");
  check->add_flag("--json-diagnostics", json, "print diagnostics as JSON on stdout");

  std::string name;
  bool unfold = false;
  auto* type = app.add_subcommand("type", "print the normal form of a declaration's type");
  type->add_option("name", name, "stem.name or a global name")->required();
  type->add_flag("--unfold", unfold, "unfold definitions while normalizing");

  std::string text;
  auto* normalize = app.add_subcommand("normalize", "normalize a declaration body or a closed term");
  normalize->add_option("term", text, "stem.name or a term")->required();
  normalize->add_flag("--unfold", unfold, "unfold definitions while normalizing");

  auto* axioms = app.add_subcommand("axioms", "list the axioms a declaration depends on");
  axioms->add_option("name", name, "stem.name or a global name")->required();

  std::string vecFile;
  long long fuel = 100000;
  auto* model = app.add_subcommand("model-test", "run model vectors");
  model->add_option("file", vecFile, "vector file")->required();
  auto* fuelOpt = model->add_option("--fuel", fuel, "step budget, replacing each line's own")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (model->parsed()) {
    Owned report;
    smltt_status st = smltt_model_test(vecFile.c_str(), fuelOpt->count() ? fuel : -1, &report.p);
    (st == SMLTT_OK || st == SMLTT_CHECK_FAILED ? std::cout : std::cerr) << report.str();
    return code(st);
  }

  smltt_session* s = smltt_session_new(prelude.empty() ? nullptr : prelude.c_str());
  if (!s) {
    std::cerr << "cannot create session\n";
    return 1;
  }
  int rc = 0;
  if (check->parsed()) {
    smltt_status worst = SMLTT_OK;
    for (const auto& p : paths) {
      smltt_status st = smltt_check_path(s, p.c_str(), allowAxioms ? 1 : 0);
      Owned sum;
      smltt_check_summary(s, &sum.p);
      (json ? std::cerr : std::cout) << sum.str();
      printDiagnostics(s, json);
      if (code(st) > code(worst)) worst = st;
    }
    rc = code(worst);
  } else {
    Owned out;
    smltt_status st = SMLTT_OK;
    if (type->parsed()) st = smltt_query_type(s, name.c_str(), unfold, &out.p);
    else if (normalize->parsed()) st = smltt_normalize(s, text.c_str(), unfold, &out.p);
    else st = smltt_axioms(s, name.c_str(), &out.p);
    if (st == SMLTT_OK) {
      std::string r = out.str();
      std::cout << r;
      if (!r.empty() && r.back() != '\n') std::cout << "\n";
    } else {
      printDiagnostics(s, json);
      if (smltt_diagnostic_count(s) == 0) std::cerr << smltt_status_name(st) << ": " << smltt_last_error(s) << "\n";
    }
    rc = code(st);
  }
  smltt_session_free(s);
  return rc;
}
