#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace afq::oracle {
namespace {

constexpr long double kPi = 3.141592653589793238462643383279502884L;
constexpr long double kEulerGamma = 0.577215664901532860606512090082402431L;
constexpr int kGaussOrder = 20;

struct GaussRule {
  std::array<long double, kGaussOrder> x{};
  std::array<long double, kGaussOrder> w{};
};

// Nodes and weights on [-1, 1] by Newton iteration on P_n.
const GaussRule& gauss_rule() {
  static const GaussRule rule = [] {
    GaussRule r;
    const int n = kGaussOrder;
    for (int i = 0; i < n; ++i) {
      long double z = std::cos(kPi * (i + 0.75L) / (n + 0.5L));
      long double dp = 0.0L;
      for (int it = 0; it < 100; ++it) {
        long double p0 = 1.0L;
        long double p1 = z;
        for (int k = 2; k <= n; ++k) {
          const long double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (z * p1 - p0) / (z * z - 1.0L);
        const long double dz = p1 / dp;
        z -= dz;
        if (std::abs(dz) < 1e-19L) break;
      }
      r.x[i] = z;
      r.w[i] = 2.0L / ((1.0L - z * z) * dp * dp);
    }
    return r;
  }();
  return rule;
}

std::size_t panels_for(long double length, long double per_unit) {
  const long double n = std::ceil(length * per_unit);
  return n < 1.0L ? 1 : static_cast<std::size_t>(n);
}

}  // namespace

long double gauss_legendre(const std::function<long double(long double)>& f,
                           long double a, long double b, std::size_t panels) {
  const GaussRule& r = gauss_rule();
  const long double h = (b - a) / panels;
  long double sum = 0.0L;
  for (std::size_t p = 0; p < panels; ++p) {
    const long double mid = a + (p + 0.5L) * h;
    long double part = 0.0L;
    for (int i = 0; i < kGaussOrder; ++i) part += r.w[i] * f(mid + 0.5L * h * r.x[i]);
    sum += 0.5L * h * part;
  }
  return sum;
}

long double simpson(const std::function<long double(long double)>& f,
                    long double a, long double b, std::size_t panels) {
  if (panels % 2 != 0) throw std::invalid_argument("simpson needs an even panel count");
  const long double h = (b - a) / panels;
  long double odd = 0.0L;
  long double even = 0.0L;
  for (std::size_t i = 1; i < panels; ++i) {
    const long double v = f(a + i * h);
    (i % 2 ? odd : even) += v;
  }
  return h / 3.0L * (f(a) + f(b) + 4.0L * odd + 2.0L * even);
}

long double si(long double x) {
  if (x <= 4.0L) {
    // Si(x) = sum (-1)^k x^(2k+1) / ((2k+1) (2k+1)!)
    long double term = x;  // x^(2k+1) / (2k+1)!
    long double sum = 0.0L;
    for (int k = 0; k < 60; ++k) {
      sum += term / (2 * k + 1);
      term *= -x * x / ((2 * k + 2) * (2 * k + 3));
    }
    return sum - kPi / 2.0L;
  }
  auto f = [](long double t) { return std::sin(t) / t; };
  return gauss_legendre(f, 0.0L, x, panels_for(x, 2.0L)) - kPi / 2.0L;
}

long double ci(long double x) {
  if (x <= 4.0L) {
    // Ci(x) = gamma + ln x + sum_{k>=1} (-1)^k x^(2k) / (2k (2k)!)
    long double term = 1.0L;  // x^(2k) / (2k)!
    long double sum = 0.0L;
    for (int k = 1; k < 60; ++k) {
      term *= -x * x / ((2 * k - 1) * (2 * k));
      sum += term / (2 * k);
    }
    return kEulerGamma + std::log(x) + sum;
  }
  auto f = [](long double t) {
    // (cos t - 1) / t = -2 sin^2(t/2) / t
    const long double h = std::sin(0.5L * t);
    return -2.0L * h * h / t;
  };
  return kEulerGamma + std::log(x) +
         gauss_legendre(f, 0.0L, x, panels_for(x, 2.0L));
}

long double bessel_j0(long double x) {
  x = std::abs(x);
  if (x <= 12.0L) {
    const long double q = -0.25L * x * x;
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 1; k < 80; ++k) {
      term *= q / (static_cast<long double>(k) * k);
      sum += term;
    }
    return sum;
  }
  auto f = [x](long double th) { return std::cos(x * std::sin(th)); };
  return gauss_legendre(f, 0.0L, kPi, panels_for(x, 1.0L)) / kPi;
}

long double bessel_j0_first_zero() {
  long double lo = 2.0L;
  long double hi = 3.0L;
  for (int i = 0; i < 200 && hi - lo > 1e-18L; ++i) {
    const long double mid = 0.5L * (lo + hi);
    (bessel_j0(mid) > 0.0L ? lo : hi) = mid;
  }
  return 0.5L * (lo + hi);
}

long double kernel_Y(long double delta, long double s, long double tau) {
  using C = std::complex<long double>;
  const C num = 1.0L - std::exp(C(-s * tau, delta * tau));
  return (num / C(s, -delta)).real();
}

namespace {

long double xi_max(long double b_C) {
  return std::sqrt(b_C * b_C + kPi * kPi / 12.0L) - b_C;
}

}  // namespace

long double single_rate_simpson(long double b_C, long double s,
                                long double delta_b, long double tau,
                                std::size_t panels) {
  const long double w0 = std::sqrt(1.0L + b_C * b_C) + b_C;
  auto f = [&](long double xi) {
    return (w0 + xi) * kernel_Y(xi + delta_b, s, tau);
  };
  return simpson(f, 0.0L, xi_max(b_C), panels);
}

long double correlation_rate_simpson(long double b_C, long double s,
                                     long double delta, long double separation,
                                     long double tau, std::size_t panels) {
  // Integrates over the wavenumber q, where J0(q r) is smooth; in xi it has
  // a square-root branch at xi = 0 that Simpson resolves poorly.
  const long double w0 = std::sqrt(1.0L + b_C * b_C) + b_C;
  auto f = [&](long double q) {
    const long double root = std::sqrt(b_C * b_C + q * q / 12.0L);
    const long double xi = root - b_C;
    const long double jacobian = q / (12.0L * root);
    return (w0 + xi) * kernel_Y(xi + delta, s, tau) *
           std::cyl_bessel_j(0.0L, q * separation) * jacobian;
  };
  return simpson(f, 0.0L, kPi, panels);
}

long double lorentzian_limit(long double b_C, long double s,
                             long double delta_b) {
  // int_0^xm (W0 + xi) s / ((xi + d)^2 + s^2) dxi
  const long double w0 = std::sqrt(1.0L + b_C * b_C) + b_C;
  const long double xm = xi_max(b_C);
  const long double d = delta_b;
  const long double angle = std::atan((xm + d) / s) - std::atan(d / s);
  const long double logs = std::log(((xm + d) * (xm + d) + s * s) / (d * d + s * s));
  return (w0 - d) * angle + 0.5L * s * logs;
}

double wootters_concurrence(const std::array<std::complex<double>, 16>& rho) {
  using M = Eigen::Matrix4cd;
  M r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = rho[4 * i + j];
  // sy x sy is the antidiagonal (-1, 1, 1, -1).
  M flip = M::Zero();
  flip(0, 3) = -1.0;
  flip(1, 2) = 1.0;
  flip(2, 1) = 1.0;
  flip(3, 0) = -1.0;
  const M tilde = flip * r.conjugate() * flip;
  Eigen::ComplexEigenSolver<M> solver(r * tilde);
  std::array<double, 4> l{};
  for (int i = 0; i < 4; ++i) {
    l[i] = std::sqrt(std::max(0.0, solver.eigenvalues()[i].real()));
  }
  std::sort(l.begin(), l.end(), std::greater<>());
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

}  // namespace afq::oracle
