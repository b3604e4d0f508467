#pragma once

#include <stdexcept>
#include <string>

namespace smltt {

enum class ErrorKind {
  TypeMismatch,
  UnboundVariable,
  NotAFunction,
  ExpectedUniverse,
  SmallnessViolation,
  CannotInfer,
  FixShapeMismatch,
  DuplicateName,
  AxiomOutsidePrelude,
  UnknownName,
  SyntaxError,
  UnboundIdentifier,
  ElaborationAmbiguity,
  IoError,
  AxiomAudit,
};

const char* errorKindName(ErrorKind k);

struct Diagnostic {
  ErrorKind kind = ErrorKind::TypeMismatch;
  std::string message;
  std::string file;
  std::string decl;
  int line = 0;
  int col = 0;
};

class SmlttError : public std::runtime_error {
 public:
  SmlttError(ErrorKind k, const std::string& msg, int line = 0, int col = 0)
      : std::runtime_error(msg) {
    diag.kind = k;
    diag.message = msg;
    diag.line = line;
    diag.col = col;
  }
  explicit SmlttError(Diagnostic d) : std::runtime_error(d.message), diag(std::move(d)) {}

  ErrorKind kind() const { return diag.kind; }

  Diagnostic diag;
};

// True for errors reported by the parser or elaborator.
inline bool isFrontendError(ErrorKind k) {
  return k == ErrorKind::SyntaxError || k == ErrorKind::UnboundIdentifier || k == ErrorKind::ElaborationAmbiguity;
}

}  // namespace smltt
