#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "afq/error.hpp"
#include "afq/specfun.hpp"
#include "oracles.hpp"

namespace {

using namespace afq::specfun;

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) {
    g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  }
  return g;
}

double tol_for(long double ref) {
  return 1e-10 * std::max(1.0, std::abs(static_cast<double>(ref)));
}

TEST(Specfun, SiMatchesOracleOnLogGrid) {
  for (double x : log_grid(1e-3, 1e4, 100)) {
    const long double ref = afq::oracle::si(x);
    EXPECT_NEAR(si(x), static_cast<double>(ref), tol_for(ref)) << "x = " << x;
  }
}

TEST(Specfun, CiMatchesOracleOnLogGrid) {
  for (double x : log_grid(1e-3, 1e4, 100)) {
    const long double ref = afq::oracle::ci(x);
    EXPECT_NEAR(ci(x), static_cast<double>(ref), tol_for(ref)) << "x = " << x;
  }
}

TEST(Specfun, J0MatchesOracleOnLogGrid) {
  for (double x : log_grid(1e-3, 1e4, 100)) {
    const long double ref = afq::oracle::bessel_j0(x);
    EXPECT_NEAR(bessel_j0(x), static_cast<double>(ref), tol_for(ref)) << "x = " << x;
  }
}

TEST(Specfun, J0MatchesStandardLibrary) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 6.0);
  for (int i = 0; i < 500; ++i) {
    const double x = std::pow(10.0, u(rng) - 2.0);
    EXPECT_NEAR(bessel_j0(x), std::cyl_bessel_j(0.0, x), 1e-12) << "x = " << x;
  }
}

struct Reference {
  double x;
  double si;
  double ci;
  double j0;
};

// 40-digit mpmath values, rounded to 20 significant digits.
constexpr Reference kReferences[] = {
    {0.001, -1.5697963268504521731, -6.330539864080593754, 0.999999750000015625},
    {0.5, -1.0776889087518299301, -0.17778407880661290134, 0.93846980724081290423},
    {1.0, -0.62471325642771360429, 0.33740392290096813466, 0.76519768655796655145},
    {2.0, 0.034616650007798229345, 0.4229808287748649957, 0.22389077914123566805},
    {2.5, 0.20772384664893002287, 0.28587119636538349539, -0.048383776468197996327},
    {5.0, -0.020865081850222481957, -0.19002974965664387862, -0.17759677131433830435},
    {10.0, 0.0875512674239774301, -0.045456433004455372635, -0.2459357644513483352},
    {30.0, -0.0040397867645455082476, -0.033032417282071143779, -0.086367983581040211336},
    {100.0, -0.008570859905840325879, -0.0051488251426104921444, 0.019985850304223122424},
    {1234.5, 0.00080134023268758812268, 0.0001184259969612649597, -0.013550379618035721909},
    {10000.0, 0.000095218591065296491048, -0.000030551916724485212665, -0.0070961603533888014773},
    {1000000.0, -9.3675177753776911349e-7, -3.4999443892272049264e-7, 0.00033104301373987374099},
};

TEST(Specfun, FrozenHighPrecisionValues) {
  for (const auto& r : kReferences) {
    EXPECT_NEAR(si(r.x), r.si, 1e-13) << "x = " << r.x;
    EXPECT_NEAR(ci(r.x), r.ci, 1e-13) << "x = " << r.x;
    EXPECT_NEAR(bessel_j0(r.x), r.j0, 1e-13) << "x = " << r.x;
  }
}

TEST(Specfun, SpecialValues) {
  EXPECT_DOUBLE_EQ(si(0.0), -std::numbers::pi / 2);
  EXPECT_DOUBLE_EQ(bessel_j0(0.0), 1.0);
  EXPECT_NEAR(si(1e12), -std::cos(1e12) / 1e12, 1e-20);
}

TEST(Specfun, J0FirstZeroFromBisection) {
  const double root = static_cast<double>(afq::oracle::bessel_j0_first_zero());
  EXPECT_NEAR(root, 2.4048255576957727686, 1e-15);
  EXPECT_NEAR(bessel_j0(root), 0.0, 1e-15);
}

TEST(Specfun, CiDifferenceTendsToLogRatio) {
  // ci(a t) - ci(b t) -> log(a / b) as t -> 0
  const double a = 0.53559984232526475;
  const double b = 3e-3;
  for (double t : {1e-6, 1e-8, 1e-10}) {
    EXPECT_NEAR(ci(a * t) - ci(b * t), std::log(a / b), 1e-6) << "t = " << t;
  }
}

TEST(Specfun, DerivativesMatchIntegrands) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const double x = std::pow(10.0, u(rng));
    // Truncation error h^2 f'''/6 with f''' ~ 1/x stays below 1e-10.
    const double h = std::min(1e-5 * x, 1e-3);
    const double dsi = (si(x + h) - si(x - h)) / (2 * h);
    const double dci = (ci(x + h) - ci(x - h)) / (2 * h);
    EXPECT_NEAR(dsi, std::sin(x) / x, 1e-6 / x + 1e-8) << "x = " << x;
    EXPECT_NEAR(dci, std::cos(x) / x, 1e-6 / x + 1e-8) << "x = " << x;
  }
}

TEST(Specfun, ContinuityAtRegimeBoundaries) {
  for (double x : {2.0, 20.0}) {
    const double lo = std::nextafter(x, 0.0);
    const double hi = std::nextafter(x, 100.0);
    EXPECT_NEAR(si(lo), si(hi), 1e-14);
    EXPECT_NEAR(ci(lo), ci(hi), 1e-14);
    EXPECT_NEAR(bessel_j0(lo), bessel_j0(hi), 1e-14);
  }
}

TEST(Specfun, ErrorEstimatesAreSmall) {
  for (double x : log_grid(1e-3, 1e6, 40)) {
    EXPECT_LT(si_checked(x).est_abs_error, 1e-12);
    EXPECT_LT(ci_checked(x).est_abs_error, 1e-12);
    EXPECT_LT(bessel_j0_checked(x).est_abs_error, 1e-12);
  }
}

TEST(Specfun, DomainErrors) {
  EXPECT_THROW(si(-1.0), afq::DomainError);
  EXPECT_THROW(si(2e12), afq::DomainError);
  EXPECT_THROW(ci(0.0), afq::DomainError);
  EXPECT_THROW(ci(-1.0), afq::DomainError);
  EXPECT_THROW(bessel_j0(-1.0), afq::DomainError);
  EXPECT_THROW(bessel_j0(2e6), afq::DomainError);
  EXPECT_THROW(si(std::nan("")), afq::DomainError);
}

}  // namespace
