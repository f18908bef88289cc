#pragma once

// Decoherence of an entangled pair (k, l = k + d) of register qubits.
//
// The pair's concurrence decays with the sum of the two single-qubit rates and
// a correlation rate carrying the Bessel factor
//
//   R_corr(delta_b, d, tau) = int w(xi) Y(xi + delta_b - g d / 2, tau)
//                                      J0(sqrt(12 [(b_C + xi)^2 - b_C^2]) d) dxi
//
// The second qubit sits at delta_b_l = delta_b - g d, which may cross the
// turning point. dC/dtau = -(9 a^2 / 2 pi) R_sigma.

#include <span>
#include <vector>

#include "afq/model.hpp"

namespace afq {

/// Correlation part of the pair decoherence rate.
double correlation_rate(const ModelParams& p, const PairConfig& pair,
                        double tau);
/// Correlation part of the pair longitudinal rate; identical to
/// correlation_rate.
double longitudinal_correlation_rate(const ModelParams& p,
                                     const PairConfig& pair, double tau);

/// Single-qubit rate at the partner site, delta_b - g (l - k).
double shifted_single_rate(const ModelParams& p, const PairConfig& pair,
                           double tau);

struct PairRateBreakdown {
  double single_l = 0.0;
  double single_k = 0.0;
  double correlation = 0.0;
  double total = 0.0;  ///< single_l + single_k + correlation, in that order
};

PairRateBreakdown total_concurrence_rate(const ModelParams& p,
                                         const PairConfig& pair, double tau);

/// dC/dtau = -(9 a^2 / (2 pi)) R_sigma.
double concurrence_damping_rate(const ModelParams& p, double total_rate);

/// tau -> infinity limit of correlation_rate,
/// s int w J0(...) / ((xi + delta_b - g d/2)^2 + s^2) dxi.
double asymptotic_correlation_rate(const ModelParams& p,
                                   const PairConfig& pair);

struct AsymptoticTotal {
  double single_k = 0.0;
  double single_l = 0.0;
  double correlation = 0.0;
  double total = 0.0;
  /// Set when the corresponding term used (x)^2 + s^2 instead of the
  /// s^2-free denominator because its pole lies in or near [0, xi_max].
  bool regularized_single_k = false;
  bool regularized_single_l = false;
  bool regularized_correlation = false;

  bool any_regularized() const noexcept {
    return regularized_single_k || regularized_single_l ||
           regularized_correlation;
  }
};

/// Poles closer than this many multiples of s to [0, xi_max] switch that term
/// to the regularized denominator.
inline constexpr double kPoleGuardInDampingUnits = 100.0;

/// s int w [1/(xi + delta_k)^2 + 1/(xi + delta_l)^2
///          + J0(...)/(xi + delta_b - g d/2)^2] dxi, term by term.
AsymptoticTotal asymptotic_total_rate(const ModelParams& p,
                                      const PairConfig& pair);

/// max(0, (3 exp(-(gamma_l + gamma_k + gamma_corr)) - 1) / 2). gamma_corr may
/// be negative but the total must be >= 0 (DomainError otherwise).
double concurrence_from_decrements(double gamma_l, double gamma_k,
                                   double gamma_corr);

struct PairCurve {
  std::vector<double> tau_grid;
  std::vector<PairRateBreakdown> rates;
};

/// total_concurrence_rate on every grid point.
PairCurve pair_curve(const ModelParams& p, const PairConfig& pair,
                     std::span<const double> tau_grid);

/// correlation_rate on every grid point.
std::vector<double> correlation_curve(const ModelParams& p,
                                      const PairConfig& pair,
                                      std::span<const double> tau_grid);

/// Cumulative trapezoid integral of values over grid; out[0] = 0.
std::vector<double> accumulate_trapezoid(std::span<const double> grid,
                                         std::span<const double> values);

struct ConcurrenceSeries {
  std::vector<double> tau_grid;
  std::vector<double> decrement;    ///< (3 a^2 / 2 pi) int_0^tau R_sigma
  std::vector<double> concurrence;  ///< C(tau)
};

/// Concurrence of the initial |1,0> pair after accumulating the decrements
/// of a precomputed pair curve. The grid must start at tau = 0.
ConcurrenceSeries concurrence_series(const ModelParams& p,
                                     const PairCurve& curve);

}  // namespace afq
