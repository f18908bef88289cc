#include "rate_integrals.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "afq/kernel.hpp"
#include "afq/quadrature.hpp"
#include "afq/specfun.hpp"

namespace afq::detail {
namespace {

// Tighter than the 1e-10 * max(1, |R|) contract so the reported error has
// headroom.
constexpr quad::Options kTimeDependentOptions{1e-11, 1e-11, std::size_t{1} << 23};
constexpr quad::Options kAsymptoticOptions{1e-14, 1e-12, std::size_t{1} << 22};

// Below this e^{-s tau} the oscillatory part of Y is far under tolerance and
// is not given dedicated panels.
constexpr double kNegligibleDecay = 1e-25;

double bessel_argument(double xi, double b_C) {
  return std::sqrt(12.0 * xi * (2.0 * b_C + xi));
}

// Panel boundaries uniform in u = sqrt(12 [(b_C + xi)^2 - b_C^2]) with
// spacing pi / (2 d), mapped back to xi. This is the substitution that makes
// the J0 argument linear in the integration variable.
std::vector<double> bessel_breakpoints(const ModelParams& p,
                                       std::int64_t separation) {
  std::vector<double> out;
  if (separation <= 0) return out;
  const auto n = static_cast<std::size_t>(2 * separation);
  out.reserve(n);
  const double b = p.b_C();
  for (std::size_t j = 1; j < n; ++j) {
    const double u = std::numbers::pi * static_cast<double>(j) /
                     static_cast<double>(n);
    const double q = u * u / 12.0;
    out.push_back(q / (std::sqrt(b * b + q) + b));
  }
  return out;
}

quad::PartitionHints hints_for(const ModelParams& p, double delta, double tau,
                               double decay) {
  quad::PartitionHints h;
  h.poles = {-delta};
  h.pole_width = p.s();
  if (tau > 0.0 && decay > kNegligibleDecay) {
    h.period = 2.0 * std::numbers::pi / tau;
  }
  return h;
}

RateIntegral to_integral(const quad::Result& r) {
  return {r.value, r.abs_error, r.intervals};
}

}  // namespace

double pole_distance(const ModelParams& p, double delta) {
  const double pole = -delta;
  if (pole < 0.0) return -pole;
  if (pole > p.xi_max()) return pole - p.xi_max();
  return 0.0;
}

RateIntegral single_rate_integral(const ModelParams& p, double delta,
                                  double tau) {
  if (tau == 0.0) return {};
  const double s = p.s();
  const double decay = std::exp(-s * tau);
  const double neg_expm1 = -std::expm1(-s * tau);
  const double w0 = p.weight_offset();

  auto f = [=](double xi) {
    return (w0 + xi) *
           kernel_Y_unchecked(xi + delta, s, tau, decay, neg_expm1);
  };
  const auto pts = quad::build_partition(0.0, p.xi_max(),
                                         hints_for(p, delta, tau, decay));
  return to_integral(quad::integrate(f, pts, kTimeDependentOptions));
}

RateIntegral correlation_rate_integral(const ModelParams& p, double delta,
                                       std::int64_t separation, double tau) {
  if (tau == 0.0) return {};
  const double s = p.s();
  const double decay = std::exp(-s * tau);
  const double neg_expm1 = -std::expm1(-s * tau);
  const double w0 = p.weight_offset();
  const double b = p.b_C();
  const auto d = static_cast<double>(separation);

  auto f = [=](double xi) {
    const double j0 = specfun::detail::bessel_j0_unchecked(
        d * bessel_argument(xi, b));
    return (w0 + xi) * j0 *
           kernel_Y_unchecked(xi + delta, s, tau, decay, neg_expm1);
  };
  auto hints = hints_for(p, delta, tau, decay);
  hints.extra = bessel_breakpoints(p, separation);
  const auto pts = quad::build_partition(0.0, p.xi_max(), hints);
  return to_integral(quad::integrate(f, pts, kTimeDependentOptions));
}

RateIntegral asymptotic_integral(const ModelParams& p, double delta,
                                 std::int64_t separation, bool with_bessel,
                                 bool regularized) {
  const double s = p.s();
  const double s2 = regularized ? s * s : 0.0;
  const double w0 = p.weight_offset();
  const double b = p.b_C();
  const auto d = static_cast<double>(separation);

  auto f = [=](double xi) {
    const double x = xi + delta;
    const double k =
        with_bessel
            ? specfun::detail::bessel_j0_unchecked(d * bessel_argument(xi, b))
            : 1.0;
    return s * (w0 + xi) * k / (x * x + s2);
  };
  quad::PartitionHints hints;
  hints.poles = {-delta};
  hints.pole_width = s;
  if (with_bessel) hints.extra = bessel_breakpoints(p, separation);
  const auto pts = quad::build_partition(0.0, p.xi_max(), hints);
  return to_integral(quad::integrate(f, pts, kAsymptoticOptions));
}

}  // namespace afq::detail
