#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "afq/error.hpp"
#include "afq/quadrature.hpp"

namespace {

using namespace afq::quad;

TEST(GaussKronrod, ExactForPolynomialsUpToDegree31) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int degree = 0; degree <= 31; ++degree) {
    std::vector<double> c(degree + 1);
    for (auto& x : c) x = u(rng);
    auto f = [&](double x) {
      double v = 0.0;
      for (int k = degree; k >= 0; --k) v = v * x + c[k];
      return v;
    };
    double exact = 0.0;
    for (int k = 0; k <= degree; ++k) {
      exact += c[k] * (std::pow(2.0, k + 1) - std::pow(-1.0, k + 1)) / (k + 1);
    }
    const SegmentEstimate est = gauss_kronrod21(f, -1.0, 2.0);
    EXPECT_NEAR(est.value, exact, 1e-11 * std::max(1.0, std::abs(exact)))
        << "degree " << degree;
  }
}

TEST(Integrate, SmoothIntegrals) {
  auto f = [](double x) { return std::exp(-x) * std::cos(3 * x); };
  const double bp[] = {0.0, 5.0};
  const Result r = integrate(f, bp, {1e-14, 1e-14, 1000});
  const double exact = (1.0 + std::exp(-5.0) * (3 * std::sin(15.0) - std::cos(15.0))) / 10.0;
  EXPECT_NEAR(r.value, exact, 1e-14);
  EXPECT_LE(r.abs_error, 1e-14);
}

TEST(Integrate, NarrowLorentzianNeedsPartitionHints) {
  const double s = 1e-6;
  const double c = 0.3;
  auto f = [&](double x) { return s / ((x - c) * (x - c) + s * s); };
  const double exact = std::atan((1.0 - c) / s) + std::atan(c / s);
  PartitionHints hints;
  hints.poles = {c};
  hints.pole_width = s;
  const auto bp = build_partition(0.0, 1.0, hints);
  const Result r = integrate(f, bp, {1e-12, 1e-12, 100000});
  // x - c is rounded to ulp(c) ~ 5e-17 against a width of 1e-6, so the
  // integrand itself carries ~1e-11 relative noise at the peak.
  EXPECT_NEAR(r.value, exact, 1e-10);
}

TEST(Integrate, OscillatoryIntegralWithPeriodHint) {
  const double w = 2e4;
  auto f = [&](double x) { return std::sin(w * x) * x; };
  PartitionHints hints;
  hints.period = 2 * std::numbers::pi / w;
  const auto bp = build_partition(0.0, 1.0, hints);
  const Result r = integrate(f, bp, {1e-13, 1e-12, 1 << 20});
  const double exact = (std::sin(w) - w * std::cos(w)) / (w * w);
  EXPECT_NEAR(r.value, exact, 1e-12);
}

TEST(Integrate, ThrowsOnNonconvergenceWithBestEstimate) {
  auto f = [](double x) { return 1.0 / std::sqrt(std::abs(x - 0.3)); };
  const double bp[] = {0.0, 1.0};
  try {
    integrate(f, bp, {1e-15, 1e-15, 8});
    FAIL() << "expected QuadratureError";
  } catch (const afq::QuadratureError& e) {
    EXPECT_EQ(e.code(), afq::ErrorCode::kQuadratureNonconvergence);
    EXPECT_GT(e.abs_error(), 1e-15);
    EXPECT_LE(e.intervals(), 8u);
    EXPECT_TRUE(std::isfinite(e.value()));
  }
}

TEST(Integrate, NonFiniteIntegrandIsReported) {
  auto f = [](double x) { return 1.0 / std::sqrt(std::abs(x - 0.5)); };
  const double bp[] = {0.0, 1.0};
  EXPECT_THROW(integrate(f, bp, {1e-10, 1e-10, 64}), afq::QuadratureError);
}

TEST(Integrate, DegenerateBreakpoints) {
  auto f = [](double) { return 1.0; };
  const double one[] = {1.0};
  EXPECT_EQ(integrate(f, one).value, 0.0);
  const double repeated[] = {0.0, 0.5, 0.5, 1.0};
  EXPECT_NEAR(integrate(f, repeated).value, 1.0, 1e-15);
}

TEST(BuildPartition, SortedCoversInterval) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    PartitionHints h;
    h.poles = {u(rng), -u(rng), 1.0 + u(rng)};
    h.pole_width = 1e-6 * (1.0 + u(rng));
    h.period = trial % 2 ? 1e-3 * (1.0 + u(rng)) : 0.0;
    h.extra = {u(rng), u(rng), 2.0};
    const auto bp = build_partition(0.0, 1.0, h);
    ASSERT_GE(bp.size(), 2u);
    EXPECT_EQ(bp.front(), 0.0);
    EXPECT_EQ(bp.back(), 1.0);
    for (std::size_t i = 1; i < bp.size(); ++i) ASSERT_LT(bp[i - 1], bp[i]);
  }
}

TEST(BuildPartition, OscillationPanelsAreCapped) {
  PartitionHints h;
  h.period = 1e-9;
  h.max_oscillation_panels = 1000;
  const auto bp = build_partition(0.0, 1.0, h);
  EXPECT_LE(bp.size(), 1002u);
}

}  // namespace
