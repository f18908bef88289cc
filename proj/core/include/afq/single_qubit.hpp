#pragma once

// One-qubit nonadiabatic decoherence and longitudinal relaxation driven by
// virtual one-magnon processes.
//
// Dimensionless rate:
//
//   R(delta_b, tau) = int_0^{xi_max} (sqrt(1 + b_C^2) + b_C + xi)
//                                    Y(xi + delta_b, tau) dxi
//
// with Re d(gamma)/d(tau) = 3 a^2 / (2 pi) R. To second order the longitudinal
// relaxation rate equals the transverse (decoherence) rate, so both public
// names below evaluate the same function.

#include <span>
#include <vector>

#include "afq/model.hpp"

namespace afq {

/// Adaptive-quadrature value of R(delta_b, tau); absolute error below
/// 1e-10 max(1, |R|). Throws QuadratureError on nonconvergence and
/// DomainError for tau < 0.
double rate_quadrature(const ModelParams& p, const QubitSite& site, double tau);

/// Transverse decoherence rate R (same function as rate_quadrature).
double decoherence_rate(const ModelParams& p, const QubitSite& site,
                        double tau);
/// Longitudinal relaxation rate; identical to decoherence_rate.
double longitudinal_relaxation_rate(const ModelParams& p,
                                    const QubitSite& site, double tau);

/// Closed form of R obtained by dropping s^2 next to (xi + delta_b)^2 in the
/// denominators. Valid for delta_b > 10 s; tau > 0. Throws DomainError
/// outside that window.
double rate_closed_form(const ModelParams& p, const QubitSite& site,
                        double tau);

struct DecoherenceTime {
  /// 1/T_D in 1/s.
  double rate_per_second = 0.0;
  /// T_D in seconds.
  double seconds = 0.0;
  /// R(delta_b, infinity) = s * braced.
  double dimensionless_rate = 0.0;
  /// (W - delta_b) xi_max / (delta_b (xi_max + delta_b))
  ///   + log((xi_max + delta_b) / delta_b),  W = sqrt(1 + b_C^2) + b_C.
  double braced = 0.0;
};

/// tau -> infinity limit in closed form. Requires delta_b > 0.
DecoherenceTime inverse_decoherence_time(const ModelParams& p,
                                         const QubitSite& site);

/// Im d(gamma)/d(tau) at tau -> infinity (dimensionless, includes the
/// 3 a^2 / (2 pi) prefactor). Negative; independent of s. Requires
/// delta_b > 0.
double frequency_shift(const ModelParams& p, const QubitSite& site);

enum class RateMethod { kQuadrature, kClosedForm };

struct RateCurve {
  std::vector<double> tau_grid;
  std::vector<double> values;
  ModelParams params;
  QubitSite site;
};

/// Checks that a grid is non-empty, finite, >= 0 and strictly ascending.
void validate_tau_grid(std::span<const double> tau_grid);

/// Evaluates the rate on every grid point (in parallel where available).
/// A failure at grid index i is rethrown with the index in the message.
RateCurve curve(const ModelParams& p, const QubitSite& site,
                std::span<const double> tau_grid,
                RateMethod method = RateMethod::kQuadrature);

}  // namespace afq
