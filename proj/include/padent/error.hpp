#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace padent {

/// Stable machine-readable failure codes. The CLI prints these verbatim.
enum class ErrorCode {
  ZeroDenominator,
  NotPrime,
  PrimeMismatch,
  ZeroInput,
  NotAUnit,
  NotASquare,
  IndistinguishableAtPrecision,
  DimensionMismatch,
  DomainMismatch,
  InvalidQuotient,
  OrderOverflow,
  SizeOverflow,
  InfiniteFixedPointSet,
  NonAbelianQuotient,
  NotACZeroUnit,
  NotAOneUnit,
  SingularRho,
  ZeroPolynomial,
  ZeroSlopePresent,
  NotPrimitive,
  ModulusNotCoprimeToP,
  TooFewRecords,
  SyntaxError,
  DimensionInconsistent,
  InvalidArgument,
};

inline std::string_view code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ZeroDenominator: return "ZERO_DENOMINATOR";
    case ErrorCode::NotPrime: return "NOT_PRIME";
    case ErrorCode::PrimeMismatch: return "PRIME_MISMATCH";
    case ErrorCode::ZeroInput: return "ZERO_INPUT";
    case ErrorCode::NotAUnit: return "NOT_A_UNIT";
    case ErrorCode::NotASquare: return "NOT_A_SQUARE";
    case ErrorCode::IndistinguishableAtPrecision: return "INDISTINGUISHABLE_AT_PRECISION";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::DomainMismatch: return "DOMAIN_MISMATCH";
    case ErrorCode::InvalidQuotient: return "INVALID_QUOTIENT";
    case ErrorCode::OrderOverflow: return "ORDER_OVERFLOW";
    case ErrorCode::SizeOverflow: return "SIZE_OVERFLOW";
    case ErrorCode::InfiniteFixedPointSet: return "INFINITE_FIXED_POINT_SET";
    case ErrorCode::NonAbelianQuotient: return "NON_ABELIAN_QUOTIENT";
    case ErrorCode::NotACZeroUnit: return "NOT_C0_UNIT";
    case ErrorCode::NotAOneUnit: return "NOT_A_ONE_UNIT";
    case ErrorCode::SingularRho: return "SINGULAR_RHO";
    case ErrorCode::ZeroPolynomial: return "ZERO_POLYNOMIAL";
    case ErrorCode::ZeroSlopePresent: return "ZERO_SLOPE_PRESENT";
    case ErrorCode::NotPrimitive: return "NOT_PRIMITIVE";
    case ErrorCode::ModulusNotCoprimeToP: return "MODULUS_NOT_COPRIME_TO_P";
    case ErrorCode::TooFewRecords: return "TOO_FEW_RECORDS";
    case ErrorCode::SyntaxError: return "SYNTAX_ERROR";
    case ErrorCode::DimensionInconsistent: return "DIMENSION_INCONSISTENT";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

/// True when the failure is the mathematics refusing the input (as opposed
/// to malformed input or misuse).
inline bool is_mathematical_refusal(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotAUnit:
    case ErrorCode::NotASquare:
    case ErrorCode::InfiniteFixedPointSet:
    case ErrorCode::NotACZeroUnit:
    case ErrorCode::NotAOneUnit:
    case ErrorCode::SingularRho:
    case ErrorCode::NonAbelianQuotient:
    case ErrorCode::ZeroSlopePresent:
    case ErrorCode::ZeroInput:
    case ErrorCode::IndistinguishableAtPrecision:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace padent
