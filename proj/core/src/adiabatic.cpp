#include "afq/adiabatic.hpp"

#include <cmath>
#include <sstream>

#include "afq/error.hpp"

namespace afq::adiabatic {
namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    std::ostringstream os;
    os << "impurity parameter " << name << " must be finite and > 0 (got "
       << v << ")";
    throw Error(ErrorCode::kImpurityParameterNotPositive, os.str());
  }
}

}  // namespace

void validate(const ImpuritySpec& spec) {
  require_positive(spec.gamma_I, "gamma_I");
  require_positive(spec.gamma_imp, "gamma_imp");
  require_positive(spec.B, "B");
  require_positive(spec.T_I, "T_I");
  require_positive(spec.a_min, "a_min");
}

void validate(const ImpurityParams& params) {
  validate(params.spec);
  if (!(params.C_imp >= 0.0) || !std::isfinite(params.C_imp)) {
    throw Error(ErrorCode::kImpurityParameterNotPositive,
                "impurity parameter C_imp must be finite and >= 0");
  }
}

double polarization_argument(const ImpuritySpec& spec) {
  validate(spec);
  return std::abs(spec.gamma_imp) * spec.B * constants::kHbar /
         (2.0 * constants::kBoltzmann * spec.T_I);
}

double polarization_variance(const ImpuritySpec& spec) {
  // 1 - tanh^2 x = 1 / cosh^2 x, without cancellation at large x.
  const double c = std::cosh(polarization_argument(spec));
  return 0.25 / (c * c);
}

double modulation_per_concentration(const ImpuritySpec& spec) {
  const double coupling = constants::kMu0Over4Pi * spec.gamma_I *
                          spec.gamma_imp * constants::kHbar;
  const double a3 = spec.a_min * spec.a_min * spec.a_min;
  return coupling * coupling * kGeometricPrefactor / a3 *
         polarization_variance(spec);
}

double mean_square_modulation(const ImpurityParams& params) {
  validate(params);
  return params.C_imp * modulation_per_concentration(params.spec);
}

double allowable_concentration(const ImpuritySpec& spec, double target_T_D) {
  require_positive(target_T_D, "target_T_D");
  return 1.0 / (target_T_D * target_T_D * modulation_per_concentration(spec));
}

double default_site_density(const ImpuritySpec& spec) {
  validate(spec);
  return 1.0 / (spec.a_min * spec.a_min * spec.a_min);
}

double concentration_percent(double concentration, double site_density) {
  require_positive(site_density, "site_density");
  return 100.0 * concentration / site_density;
}

bool rigid_lattice_holds(double T_parallel_imp, double T_D) {
  require_positive(T_parallel_imp, "T_parallel_imp");
  require_positive(T_D, "T_D");
  return T_parallel_imp >= 100.0 * T_D;
}

}  // namespace afq::adiabatic
