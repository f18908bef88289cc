#pragma once

// Quadrature back end for the magnon rate integrals. Every integral runs over
// xi in [0, xi_max] with weight w(xi) = sqrt(1 + b_C^2) + b_C + xi.

#include <cstddef>
#include <cstdint>

#include "afq/model.hpp"

namespace afq::detail {

struct RateIntegral {
  double value = 0.0;
  double abs_error = 0.0;
  std::size_t intervals = 0;
};

/// int w(xi) Y(xi + delta, tau) dxi
RateIntegral single_rate_integral(const ModelParams& p, double delta,
                                  double tau);

/// int w(xi) Y(xi + delta, tau) J0(u(xi) d) dxi with
/// u(xi) = sqrt(12 [(b_C + xi)^2 - b_C^2]).
RateIntegral correlation_rate_integral(const ModelParams& p, double delta,
                                       std::int64_t separation, double tau);

/// s int w(xi) K(xi) / D(xi) dxi where D = (xi + delta)^2 (+ s^2 when
/// regularized) and K = J0(u(xi) d), or 1 when with_bessel is false.
RateIntegral asymptotic_integral(const ModelParams& p, double delta,
                                 std::int64_t separation, bool with_bessel,
                                 bool regularized);

/// Distance from the pole xi = -delta to the interval [0, xi_max]; 0 inside.
double pole_distance(const ModelParams& p, double delta);

}  // namespace afq::detail
