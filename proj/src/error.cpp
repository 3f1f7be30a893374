#include "ksym/error.hpp"

namespace ksym {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonSymmetric: return "NonSymmetric";
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::NonInvertible: return "NonInvertible";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::NotUnitVector: return "NotUnitVector";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::NotNegativeDefinite: return "NotNegativeDefinite";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::NotSkewAdjoint: return "NotSkewAdjoint";
    case ErrorCode::DimensionNotMultipleOf4: return "DimensionNotMultipleOf4";
    case ErrorCode::NotAPower: return "NotAPower";
    case ErrorCode::AmbiguousFactor: return "AmbiguousFactor";
    case ErrorCode::NotReal: return "NotReal";
    case ErrorCode::DegenerateOmega1: return "DegenerateOmega1";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::SignAmbiguous: return "SignAmbiguous";
    case ErrorCode::MissingMultilinearData: return "MissingMultilinearData";
    case ErrorCode::NoNonNullAlpha: return "NoNonNullAlpha";
  }
  return "Unknown";
}

}  // namespace ksym
