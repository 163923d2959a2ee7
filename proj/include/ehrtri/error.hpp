#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ehrtri {

enum class ErrorCode {
  InvalidInput,
  NotInLattice,
  ZeroVector,
  DependentGenerators,
  FaceNotInComplex,
  NotAFace,
  OutsideSupport,
  NotSpecial,
  RayOutsideUniverse,
  NonPositiveGrading,
  NegativeDegree,
  TermBudgetExceeded,
  UnsupportedShape,
  OriginNotInterior,
  InvalidTriangulation,
  NotReflexive,
  MethodMismatch,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `index` carries the offending
/// position (point index, weight index, ...) when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> index = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& message() const noexcept { return message_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::string message_;
  std::optional<std::size_t> index_;
};

}  // namespace ehrtri
