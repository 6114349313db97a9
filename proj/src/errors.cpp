#include "simplexgeo/errors.hpp"

namespace simplexgeo {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidDimension: return "InvalidDimension";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::NonPositiveValue: return "NonPositiveValue";
    case ErrorCode::NotOnSimplex: return "NotOnSimplex";
    case ErrorCode::NotTangent: return "NotTangent";
    case ErrorCode::MixedSignParameter: return "MixedSignParameter";
    case ErrorCode::ZeroComponent: return "ZeroComponent";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::RaggedRows: return "RaggedRows";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
  }
  return "UnknownError";
}

bool is_numerical(ErrorCode code) {
  return code == ErrorCode::NonConvergence || code == ErrorCode::Overflow ||
         code == ErrorCode::NotPositiveDefinite;
}

}  // namespace simplexgeo
