#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "frontend/elaborate.hpp"
#include "kernel/kernel.hpp"

namespace smltt {

struct DeclRecord {
  std::string name;
  std::string file;  // path as loaded
  std::string stem;
  int line = 0;
  bool isAxiom = false;
};

struct FileReport {
  std::string path;
  bool ok = true;
  std::vector<Diagnostic> diagnostics;
  std::vector<std::string> decls;
  double seconds = 0;
};

struct ManifestEntry {
  std::string path;
  std::string tier;
  std::set<std::string> expectedAxioms;
};

struct CheckReport {
  std::vector<FileReport> files;
  std::vector<Diagnostic> audit;
  std::map<std::string, std::set<std::string>> axiomsByFile;
  double seconds = 0;

  bool ok() const;
  std::vector<Diagnostic> diagnostics() const;
};

// Reads `MANIFEST`: one `path tier [axiom ...]` line per file, `#` comments.
std::vector<ManifestEntry> readManifest(const std::string& path);

std::string defaultPreludePath();

class Session {
 public:
  explicit Session(std::string preludePath = "");

  // Loads the trusted prelude once; errors are reported like file errors.
  FileReport loadPrelude();

  // Checks a file and, first, anything it imports.
  FileReport checkFile(const std::string& path, bool allowAxioms = false);

  // A directory (using its MANIFEST when present) or a manifest file.
  CheckReport checkCorpus(const std::string& where, bool allowAxioms = false);

  // "stem.name" or a bare global name; throws UnknownName.
  std::string resolve(const std::string& query) const;
  std::optional<DeclRecord> record(const std::string& name) const;
  const std::vector<DeclRecord>& records() const { return records_; }

  TermP typeTerm(const std::string& name) const;
  TermP bodyTerm(const std::string& name) const;

  // Elaborates against the loaded globals and notations.
  TermP elaborateText(const std::string& text, Mode mode) const;

  std::string printType(const TermP& t) const;

  Kernel& kernel() { return kernel_; }
  const std::map<std::string, Notation>& notations() const { return notations_; }
  Scope scope() const;

 private:
  void checkDecl(const SurfaceDecl& d, const std::string& file, bool trusted);
  FileReport checkFileImpl(const std::string& path, bool trusted, bool allowAxioms, std::vector<std::string>& stack);
  std::optional<Diagnostic> manifestOrder(const std::vector<ManifestEntry>& entries, const std::filesystem::path& base,
                                          const std::string& manifestPath) const;

  std::string preludePath_;
  bool preludeLoaded_ = false;
  Kernel kernel_;
  std::map<std::string, Notation> notations_;
  std::vector<DeclRecord> records_;
  std::map<std::string, std::size_t> recordIndex_;
  std::map<std::string, FileReport> loaded_;  // canonical path -> report
};

// Process exit code for a set of diagnostics: 3 I/O, 2 parse, 1 type, 0 none.
int exitCodeFor(const std::vector<Diagnostic>& diags);

}  // namespace smltt
