#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace smltt::model {

// One check per line:
//   fixlaw <f> <a> <fuel>
//   phi <fr> <gr> <n> <fuel>
//   track <asmA> <asmB> <table> <tracker> <fuel>
//   truncate <asm> <classes>
//   universal <max-elements> <tokens>
// Assemblies are ((elem realiser ...) ...), tables ((elem elem) ...).
struct VectorResult {
  int line = 0;
  std::string text;
  bool pass = false;
  std::string detail;
};

struct VectorRun {
  std::vector<VectorResult> results;
  bool allPass() const;
};

// Throws SmlttError(SyntaxError) on a malformed line. A fuel override, when
// given, replaces every per-line fuel.
VectorRun runVectors(const std::string& text, std::optional<std::uint64_t> fuelOverride = std::nullopt);

}  // namespace smltt::model
