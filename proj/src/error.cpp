#include "frm/error.hpp"

namespace frm {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::NoBoundedLattice: return "NoBoundedLattice";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::NotAHom: return "NotAHom";
    case ErrorKind::NotInjective: return "NotInjective";
    case ErrorKind::NotACongruence: return "NotACongruence";
    case ErrorKind::GenerationFails: return "GenerationFails";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::NotWellDefined: return "NotWellDefined";
    case ErrorKind::NoMediatingMap: return "NoMediatingMap";
    case ErrorKind::NonUniqueMediatingMap: return "NonUniqueMediatingMap";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::BadInput: return "BadInput";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::vector<std::size_t> witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

}  // namespace frm
