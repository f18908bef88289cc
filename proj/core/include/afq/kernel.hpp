#pragma once

// Spectral kernel Y and the integration weight shared by all magnon-induced
// rate integrals.
//
//   Y(delta, tau) = Re (1 - exp[(i delta - s) tau]) / (s - i delta)
//                 = [delta sin(delta tau) e^{-s tau}
//                    + s (1 - cos(delta tau) e^{-s tau})] / (delta^2 + s^2)
//
// Y(., 0) = 0 and Y -> s / (delta^2 + s^2) as tau -> infinity.

#include <cmath>

namespace afq {

struct KernelArgs {
  double delta = 0.0;  ///< shifted detuning xi + delta_b (minus any pair shift)
  double s = 0.0;      ///< damping, > 0
  double tau = 0.0;    ///< dimensionless time, >= 0
};

/// Throws DomainError if s <= 0 or tau < 0.
double kernel_Y(const KernelArgs& args);

/// sqrt(1 + b_C^2) + b_C + xi for 0 <= xi <= xi_max(b_C).
double weight(double xi, double b_C);

namespace detail {

// 1 - cos(x) e^{-y} computed as -expm1(-y) + 2 e^{-y} sin^2(x/2), which has
// no cancellation for small x or small y.
inline double one_minus_cos_decay(double x, double decay, double neg_expm1) {
  const double h = std::sin(0.5 * x);
  return neg_expm1 + 2.0 * decay * h * h;
}

// Hot-loop form of kernel_Y with precomputed e^{-s tau} and -expm1(-s tau).
inline double kernel_Y_unchecked(double delta, double s, double tau,
                                 double decay, double neg_expm1) {
  const double denom = delta * delta + s * s;
  const double phase = delta * tau;
  const double osc = decay == 0.0 ? 0.0 : delta * std::sin(phase) * decay;
  return (osc + s * one_minus_cos_decay(phase, decay, neg_expm1)) / denom;
}

}  // namespace detail

}  // namespace afq
