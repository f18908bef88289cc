#include "afq/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "afq/error.hpp"

namespace afq {
namespace {

[[noreturn]] void reject(ErrorCode code, const char* what, double value) {
  std::ostringstream os;
  os << "ModelParams: " << what << " (got " << value << ")";
  throw Error(code, os.str());
}

void validate(const ModelParams::Fields& f) {
  for (double v : {f.b_C, f.s, f.a, f.g, f.omega_E, f.gamma_ratio}) {
    if (!std::isfinite(v)) {
      reject(ErrorCode::kNonFiniteParameter, "all fields must be finite", v);
    }
  }
  if (!(f.b_C > 0.0)) {
    reject(ErrorCode::kCriticalFieldNotPositive, "b_C must be > 0", f.b_C);
  }
  if (!(f.s > 0.0)) {
    reject(ErrorCode::kDampingNotPositive, "s must be > 0", f.s);
  }
  if (!(f.s < f.b_C)) {
    reject(ErrorCode::kDampingNotBelowCriticalField, "s must be < b_C", f.s);
  }
  if (!(f.s < ModelParams::kMaxDamping)) {
    reject(ErrorCode::kDampingNotSmall, "s must be < 1e-2", f.s);
  }
  if (!(f.g >= 0.0)) {
    reject(ErrorCode::kGradientNegative, "g must be >= 0", f.g);
  }
  if (!(f.omega_E > 0.0)) {
    reject(ErrorCode::kExchangeFrequencyNotPositive, "omega_E must be > 0",
           f.omega_E);
  }
  if (f.a == 0.0) {
    reject(ErrorCode::kHyperfineZero, "a must be nonzero", f.a);
  }
}

}  // namespace

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kCriticalFieldNotPositive: return "critical_field_not_positive";
    case ErrorCode::kDampingNotPositive: return "damping_not_positive";
    case ErrorCode::kDampingNotBelowCriticalField: return "damping_not_below_critical_field";
    case ErrorCode::kDampingNotSmall: return "damping_not_small";
    case ErrorCode::kGradientNegative: return "gradient_negative";
    case ErrorCode::kExchangeFrequencyNotPositive: return "exchange_frequency_not_positive";
    case ErrorCode::kHyperfineZero: return "hyperfine_zero";
    case ErrorCode::kNonFiniteParameter: return "non_finite_parameter";
    case ErrorCode::kDetuningOutOfRange: return "detuning_out_of_range";
    case ErrorCode::kSeparationTooSmall: return "separation_too_small";
    case ErrorCode::kSiteIndexNegative: return "site_index_negative";
    case ErrorCode::kNotHermitian: return "not_hermitian";
    case ErrorCode::kTraceNotOne: return "trace_not_one";
    case ErrorCode::kNotPositive: return "not_positive";
    case ErrorCode::kImpurityParameterNotPositive: return "impurity_parameter_not_positive";
    case ErrorCode::kQuadratureNonconvergence: return "quadrature_nonconvergence";
    case ErrorCode::kDegeneracyResolution: return "degeneracy_resolution";
    case ErrorCode::kConfig: return "config";
  }
  return "unknown";
}

ModelParams::ModelParams(const Fields& f) : f_(f) {
  validate(f_);
  xi_max_ = afq::xi_max(f_.b_C);
  weight_offset_ = std::sqrt(1.0 + f_.b_C * f_.b_C) + f_.b_C;
}

ModelParams ModelParams::figure_defaults() { return ModelParams(Fields{}); }

double ModelParams::rate_prefactor() const noexcept {
  return 3.0 * f_.a * f_.a / (2.0 * std::numbers::pi);
}

QubitSite QubitSite::create(const ModelParams& p, double delta_b,
                            std::int64_t site_index) {
  if (!std::isfinite(delta_b) || !(std::abs(delta_b) < p.b_C())) {
    std::ostringstream os;
    os << "QubitSite: |delta_b| must be < b_C = " << p.b_C() << " (got "
       << delta_b << ")";
    throw Error(ErrorCode::kDetuningOutOfRange, os.str());
  }
  if (site_index < 0) {
    throw Error(ErrorCode::kSiteIndexNegative, "QubitSite: site index must be >= 0");
  }
  return QubitSite(delta_b, site_index);
}

QubitSite QubitSite::from_field(const ModelParams& p, double b,
                                std::int64_t site_index) {
  const double delta = p.b_C() - b - p.g() * static_cast<double>(site_index);
  return create(p, delta, site_index);
}

PairConfig::PairConfig(QubitSite site, std::int64_t separation)
    : site_(site), separation_(separation) {
  if (separation < 1) {
    throw Error(ErrorCode::kSeparationTooSmall,
                "PairConfig: separation l - k must be >= 1");
  }
}

PairConfig PairConfig::allow_zero(QubitSite site, std::int64_t separation) {
  if (separation < 0) {
    throw Error(ErrorCode::kSeparationTooSmall,
                "PairConfig: separation l - k must be >= 0");
  }
  return PairConfig(site, separation, Unchecked{});
}

double xi_max(double b_C) {
  if (!(b_C > 0.0) || !std::isfinite(b_C)) {
    throw DomainError("xi_max: b_C must be > 0");
  }
  // sqrt(b^2 + c) - b written without cancellation for large b.
  constexpr double c = std::numbers::pi * std::numbers::pi / 12.0;
  return c / (std::sqrt(b_C * b_C + c) + b_C);
}

double magnon_dispersion(double q_perp, double b_C) {
  if (!(q_perp >= 0.0 && q_perp <= std::numbers::pi)) {
    throw DomainError("magnon_dispersion: q_perp must lie in [0, pi]");
  }
  return std::sqrt(b_C * b_C + q_perp * q_perp / 12.0);
}

double physical_rate(double dimensionless_rate, const ModelParams& p) {
  return p.omega_E() * p.rate_prefactor() * dimensionless_rate;
}

}  // namespace afq
