#pragma once

#include <stdexcept>
#include <string>

namespace simplexgeo {

enum class ErrorCode {
  // validation
  DimensionMismatch,
  InvalidDimension,
  NonFiniteValue,
  NonPositiveValue,
  NotOnSimplex,
  NotTangent,
  MixedSignParameter,
  ZeroComponent,
  IndexOutOfRange,
  InvalidPermutation,
  InvalidArgument,
  ParseError,
  RaggedRows,
  // numerical
  NonConvergence,
  Overflow,
  NotPositiveDefinite,
};

const char* to_string(ErrorCode code);

// Numerical failures map to CLI exit status 2, everything else to 1.
bool is_numerical(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace simplexgeo
