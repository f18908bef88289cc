#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace afq {

// Machine-readable failure categories. The numeric values are stable and are
// reported by the CLI alongside the message.
enum class ErrorCode {
  // special functions / generic argument checks
  kDomain = 1,

  // ModelParams invariants
  kCriticalFieldNotPositive = 10,
  kDampingNotPositive = 11,
  kDampingNotBelowCriticalField = 12,
  kDampingNotSmall = 13,
  kGradientNegative = 14,
  kExchangeFrequencyNotPositive = 15,
  kHyperfineZero = 16,
  kNonFiniteParameter = 17,

  // QubitSite / PairConfig
  kDetuningOutOfRange = 20,
  kSeparationTooSmall = 21,
  kSiteIndexNegative = 22,

  // Density matrices
  kNotHermitian = 30,
  kTraceNotOne = 31,
  kNotPositive = 32,

  // Impurity model
  kImpurityParameterNotPositive = 40,

  // Numerics
  kQuadratureNonconvergence = 50,
  kDegeneracyResolution = 51,

  // Configuration
  kConfig = 60,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what,
                       ErrorCode code = ErrorCode::kDomain)
      : Error(code, what) {}
};

/// Thrown when adaptive quadrature exhausts its interval budget before the
/// error target is met. Carries the best estimate reached.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double value, double abs_error,
                  std::size_t intervals)
      : Error(ErrorCode::kQuadratureNonconvergence, what),
        value_(value),
        abs_error_(abs_error),
        intervals_(intervals) {}

  double value() const noexcept { return value_; }
  double abs_error() const noexcept { return abs_error_; }
  std::size_t intervals() const noexcept { return intervals_; }

 private:
  double value_;
  double abs_error_;
  std::size_t intervals_;
};

}  // namespace afq
