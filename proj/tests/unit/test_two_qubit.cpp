#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "afq/error.hpp"
#include "afq/single_qubit.hpp"
#include "afq/two_qubit.hpp"
#include "oracles.hpp"

namespace {

using afq::ModelParams;
using afq::PairConfig;
using afq::QubitSite;

const ModelParams& params() {
  static const ModelParams p = ModelParams::figure_defaults();
  return p;
}

TEST(CorrelationRate, ZeroSeparationReducesToSingleRate) {
  const auto& p = params();
  for (double d : {-3e-3, 1e-3, 3e-3}) {
    const auto site = QubitSite::create(p, d);
    const auto pair = PairConfig::allow_zero(site, 0);
    for (double tau : {1e2, 1e4, 1e6}) {
      const double single = afq::rate_quadrature(p, site, tau);
      EXPECT_NEAR(afq::correlation_rate(p, pair, tau), single,
                  1e-10 * std::max(1.0, std::abs(single)));
    }
  }
}

TEST(CorrelationRate, MatchesSimpsonOracle) {
  const auto& p = params();
  const auto site = QubitSite::create(p, 3e-3);
  for (std::int64_t sep : {1, 200, 300}) {
    const PairConfig pair(site, sep);
    const double delta = 3e-3 - 0.5 * p.g() * static_cast<double>(sep);
    const double tau = 1e3;
    const double ref = static_cast<double>(afq::oracle::correlation_rate_simpson(
        p.b_C(), p.s(), delta, static_cast<double>(sep), tau, 1u << 18));
    const double r = afq::correlation_rate(p, pair, tau);
    EXPECT_NEAR(r, ref, 1e-7 * std::max(std::abs(ref), 1e-3)) << "sep " << sep;
  }
}

TEST(CorrelationRate, LongitudinalNameIsTheSameFunction) {
  const auto& p = params();
  const PairConfig pair(QubitSite::create(p, 3e-3), 250);
  EXPECT_EQ(afq::correlation_rate(p, pair, 1e4),
            afq::longitudinal_correlation_rate(p, pair, 1e4));
}

TEST(ShiftedSingleRate, UsesPartnerDetuning) {
  const auto& p = params();
  const PairConfig pair(QubitSite::create(p, 3e-3), 100);
  const auto partner = QubitSite::create(p, 3e-3 - 100 * p.g());
  EXPECT_EQ(afq::shifted_single_rate(p, pair, 1e4), afq::rate_quadrature(p, partner, 1e4));
}

TEST(ShiftedSingleRate, PartnerBeyondRangeIsRejected) {
  ModelParams::Fields f;
  f.g = 1e-3;
  const ModelParams p(f);
  const PairConfig pair(QubitSite::create(p, 3e-3), 1000);
  EXPECT_THROW(afq::shifted_single_rate(p, pair, 1e4), afq::Error);
}

TEST(TotalRate, DecompositionIdentityIsExact) {
  const auto& p = params();
  const PairConfig pair(QubitSite::create(p, 3e-3), 299);
  for (double tau : {0.0, 1e2, 1e5}) {
    const auto r = afq::total_concurrence_rate(p, pair, tau);
    EXPECT_EQ(r.total, r.single_l + r.single_k + r.correlation);
  }
}

TEST(TotalRate, DampingRateSign) {
  const auto& p = params();
  EXPECT_NEAR(afq::concurrence_damping_rate(p, 1.0), -3.0 * p.rate_prefactor(), 1e-20);
}

TEST(AsymptoticCorrelation, SignAlternatesBeyondTurningPoint) {
  const auto& p = params();
  const auto site = QubitSite::create(p, 3e-3);
  const double r299 = afq::asymptotic_correlation_rate(p, PairConfig(site, 299));
  const double r300 = afq::asymptotic_correlation_rate(p, PairConfig(site, 300));
  const double r301 = afq::asymptotic_correlation_rate(p, PairConfig(site, 301));
  EXPECT_LT(r299 * r300, 0.0);
  EXPECT_LT(r300 * r301, 0.0);
}

TEST(AsymptoticCorrelation, MatchesLargeTauCorrelationRate) {
  const auto& p = params();
  const PairConfig pair(QubitSite::create(p, 3e-3), 200);
  const double asym = afq::asymptotic_correlation_rate(p, pair);
  const double late = afq::correlation_rate(p, pair, 30.0 / p.s());
  EXPECT_NEAR(late, asym, 1e-4 * std::abs(asym) + 1e-15);
}

TEST(AsymptoticTotal, MatchesLargeTauTotalAwayFromPoles) {
  const auto& p = params();
  const PairConfig pair(QubitSite::create(p, 3e-3), 200);
  const auto asym = afq::asymptotic_total_rate(p, pair);
  EXPECT_FALSE(asym.any_regularized());
  const auto late = afq::total_concurrence_rate(p, pair, 30.0 / p.s());
  EXPECT_NEAR(late.total, asym.total, 1e-4 * asym.total);
}

TEST(AsymptoticTotal, FlagsTermsWithNearbyPoles) {
  const auto& p = params();
  const auto asym = afq::asymptotic_total_rate(p, PairConfig(QubitSite::create(p, 3e-3), 300));
  EXPECT_TRUE(asym.regularized_single_l);
  EXPECT_FALSE(asym.regularized_single_k);
  EXPECT_EQ(asym.total, asym.single_k + asym.single_l + asym.correlation);
}

TEST(AsymptoticTotal, PositiveOnRandomParameters) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    ModelParams::Fields f;
    f.b_C = 0.2 + 0.6 * u(rng);
    f.s = std::pow(10.0, -6.0 + 2.0 * u(rng));
    f.g = 3e-5 * u(rng);
    const ModelParams p(f);
    const auto sep = static_cast<std::int64_t>(1 + 500 * u(rng));
    const double d = -5e-3 + 1.5e-2 * u(rng);
    const auto r = afq::asymptotic_total_rate(p, PairConfig(QubitSite::create(p, d), sep));
    EXPECT_GT(r.total, 0.0) << "b_C " << f.b_C << " s " << f.s << " g " << f.g
                            << " sep " << sep << " d " << d;
  }
}

TEST(Concurrence, FromDecrements) {
  EXPECT_DOUBLE_EQ(afq::concurrence_from_decrements(0.0, 0.0, 0.0), 1.0);
  EXPECT_EQ(afq::concurrence_from_decrements(1.0, 1.0, 1.0), 0.0);
  EXPECT_NEAR(afq::concurrence_from_decrements(0.1, 0.2, -0.05),
              0.5 * (3.0 * std::exp(-0.25) - 1.0), 1e-15);
  EXPECT_THROW(afq::concurrence_from_decrements(0.1, 0.1, -0.3), afq::DomainError);
}

TEST(Concurrence, SeriesIsMonotoneWhereTotalRateIsNonnegative) {
  const auto& p = params();
  std::vector<double> grid{0.0};
  for (int i = 0; i <= 16; ++i) grid.push_back(std::pow(10.0, 2.0 + i * 0.25));
  for (std::int64_t sep : {200, 300}) {
    const auto curve = afq::pair_curve(p, PairConfig(QubitSite::create(p, 3e-3), sep), grid);
    const auto series = afq::concurrence_series(p, curve);
    ASSERT_EQ(series.concurrence.size(), grid.size());
    EXPECT_DOUBLE_EQ(series.concurrence.front(), 1.0);
    for (std::size_t i = 1; i < grid.size(); ++i) {
      if (curve.rates[i].total < 0.0 || curve.rates[i - 1].total < 0.0) continue;
      EXPECT_LE(series.concurrence[i], series.concurrence[i - 1]) << "i = " << i;
    }
  }
}

TEST(Concurrence, NegativeTotalRateRaisesConcurrence) {
  // Before the oscillations settle the total rate dips below zero on these
  // curves, and the concurrence recovers over those steps.
  const auto& p = params();
  std::vector<double> grid;
  for (int i = 0; i <= 2000; ++i) grid.push_back(2.0 * i);
  const auto curve = afq::pair_curve(p, PairConfig(QubitSite::create(p, 3e-3), 200), grid);
  const auto series = afq::concurrence_series(p, curve);
  std::size_t rises = 0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const bool negative = curve.rates[i].total < 0.0 && curve.rates[i - 1].total < 0.0;
    if (negative) {
      EXPECT_GT(series.concurrence[i], series.concurrence[i - 1]) << "i = " << i;
      ++rises;
    }
  }
  EXPECT_GT(rises, 0u);
}

TEST(Concurrence, SeriesPrependsTauZero) {
  const auto& p = params();
  const std::vector<double> grid{1e3, 1e4};
  const auto curve = afq::pair_curve(p, PairConfig(QubitSite::create(p, 3e-3), 200), grid);
  const auto series = afq::concurrence_series(p, curve);
  EXPECT_EQ(series.tau_grid, grid);
  EXPECT_GT(series.decrement[0], 0.0);
}

TEST(AccumulateTrapezoid, ExactForLinearIntegrands) {
  const std::vector<double> x{0.0, 0.5, 2.0, 3.0};
  std::vector<double> y;
  for (double v : x) y.push_back(2.0 * v + 1.0);
  const auto out = afq::accumulate_trapezoid(x, y);
  for (std::size_t i = 0; i < x.size(); ++i) {
    EXPECT_NEAR(out[i], x[i] * x[i] + x[i], 1e-15);
  }
  EXPECT_THROW(afq::accumulate_trapezoid(x, std::vector<double>{1.0}), afq::DomainError);
}

TEST(AccumulateTrapezoid, RefinementConvergesToDecrement) {
  // The rate oscillates with period ~2 pi / xi_max, so the step must resolve
  // that scale; from there each halving cuts the change by about four.
  const auto& p = params();
  const auto site = QubitSite::create(p, 3e-3);
  auto decrement = [&](int n) {
    std::vector<double> grid(n + 1);
    std::vector<double> r(n + 1);
    for (int i = 0; i <= n; ++i) {
      grid[i] = 200.0 * i / n;
      r[i] = afq::rate_quadrature(p, site, grid[i]);
    }
    return afq::accumulate_trapezoid(grid, r).back();
  };
  std::vector<double> d;
  for (int n = 1 << 10; n <= 1 << 13; n *= 2) d.push_back(decrement(n));
  for (std::size_t i = 2; i < d.size(); ++i) {
    const double ratio = (d[i - 1] - d[i - 2]) / (d[i] - d[i - 1]);
    EXPECT_NEAR(ratio, 4.0, 0.2);
  }
  EXPECT_LT(std::abs(d.back() - d[d.size() - 2]), 1e-6 * std::abs(d.back()));
}

}  // namespace
