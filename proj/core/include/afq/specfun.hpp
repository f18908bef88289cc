#pragma once

// Sine integral, cosine integral and Bessel J0 on the real half-line.
//
// Conventions follow the tail-integral definitions
//
//   si(x) = -int_x^inf sin(t)/t dt = Si(x) - pi/2
//   ci(x) = -int_x^inf cos(t)/t dt = Ci(x)
//
// All functions are pure and thread-safe.

namespace afq::specfun {

struct SpecFunResult {
  double value = 0.0;
  double est_abs_error = 0.0;
};

/// Largest argument accepted by si/ci. Accuracy is 1e-12 absolute everywhere
/// in range; the closed-form rate expressions need arguments well beyond 1e4.
inline constexpr double kSiCiMaxArgument = 1e12;
inline constexpr double kJ0MaxArgument = 1e6;

SpecFunResult si_checked(double x);
SpecFunResult ci_checked(double x);
SpecFunResult bessel_j0_checked(double x);

/// si(x) for 0 <= x <= kSiCiMaxArgument; throws DomainError otherwise.
double si(double x);
/// ci(x) for 0 < x <= kSiCiMaxArgument; throws DomainError otherwise.
double ci(double x);
/// J0(x) for 0 <= x <= kJ0MaxArgument; throws DomainError otherwise.
double bessel_j0(double x);

namespace detail {
// Unchecked J0 for hot integrand loops; |x| is used.
double bessel_j0_unchecked(double x) noexcept;
}  // namespace detail

}  // namespace afq::specfun
