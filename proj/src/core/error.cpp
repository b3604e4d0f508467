#include "core/error.hpp"

namespace smltt {

const char* errorKindName(ErrorKind k) {
  switch (k) {
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::NotAFunction: return "NotAFunction";
    case ErrorKind::ExpectedUniverse: return "ExpectedUniverse";
    case ErrorKind::SmallnessViolation: return "SmallnessViolation";
    case ErrorKind::CannotInfer: return "CannotInfer";
    case ErrorKind::FixShapeMismatch: return "FixShapeMismatch";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::AxiomOutsidePrelude: return "AxiomOutsidePrelude";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnboundIdentifier: return "UnboundIdentifier";
    case ErrorKind::ElaborationAmbiguity: return "ElaborationAmbiguity";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::AxiomAudit: return "AxiomAudit";
  }
  return "Unknown";
}

}  // namespace smltt
