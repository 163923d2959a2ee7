#include "ehrtri/error.hpp"

namespace ehrtri {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotInLattice: return "NotInLattice";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DependentGenerators: return "DependentGenerators";
    case ErrorCode::FaceNotInComplex: return "FaceNotInComplex";
    case ErrorCode::NotAFace: return "NotAFace";
    case ErrorCode::OutsideSupport: return "OutsideSupport";
    case ErrorCode::NotSpecial: return "NotSpecial";
    case ErrorCode::RayOutsideUniverse: return "RayOutsideUniverse";
    case ErrorCode::NonPositiveGrading: return "NonPositiveGrading";
    case ErrorCode::NegativeDegree: return "NegativeDegree";
    case ErrorCode::TermBudgetExceeded: return "TermBudgetExceeded";
    case ErrorCode::UnsupportedShape: return "UnsupportedShape";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::InvalidTriangulation: return "InvalidTriangulation";
    case ErrorCode::NotReflexive: return "NotReflexive";
    case ErrorCode::MethodMismatch: return "MethodMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> index)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      message_(message),
      index_(index) {}

}  // namespace ehrtri
