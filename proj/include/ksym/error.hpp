#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ksym {

enum class ErrorCode {
  InvalidArgument,
  NonSymmetric,
  NotAntisymmetric,
  OddDimension,
  NonInvertible,
  SignatureMismatch,
  NotUnitVector,
  NotOrthogonal,
  NotNegativeDefinite,
  NotPositiveDefinite,
  NotSkewAdjoint,
  DimensionNotMultipleOf4,
  NotAPower,
  AmbiguousFactor,
  NotReal,
  DegenerateOmega1,
  RankDeficient,
  DegenerateInput,
  SignAmbiguous,
  MissingMultilinearData,
  NoNonNullAlpha,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ksym
