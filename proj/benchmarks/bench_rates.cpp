#include <cmath>

#include <benchmark/benchmark.h>

#include "afq/single_qubit.hpp"
#include "afq/two_qubit.hpp"

namespace {

const afq::ModelParams& params() {
  static const afq::ModelParams p = afq::ModelParams::figure_defaults();
  return p;
}

// range(0) is log10(tau).
void BM_RateQuadrature(benchmark::State& state) {
  const auto site = afq::QubitSite::create(params(), 3e-3);
  const double tau = std::pow(10.0, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(afq::rate_quadrature(params(), site, tau));
}
BENCHMARK(BM_RateQuadrature)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

void BM_RateClosedForm(benchmark::State& state) {
  const auto site = afq::QubitSite::create(params(), 3e-3);
  const double tau = std::pow(10.0, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(afq::rate_closed_form(params(), site, tau));
}
BENCHMARK(BM_RateClosedForm)->DenseRange(3, 6, 1);

void BM_CorrelationRate(benchmark::State& state) {
  const afq::PairConfig pair(afq::QubitSite::create(params(), 3e-3), 300);
  const double tau = std::pow(10.0, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(afq::correlation_rate(params(), pair, tau));
}
BENCHMARK(BM_CorrelationRate)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_AsymptoticTotal(benchmark::State& state) {
  const afq::PairConfig pair(afq::QubitSite::create(params(), 3e-3), 301);
  for (auto _ : state) benchmark::DoNotOptimize(afq::asymptotic_total_rate(params(), pair));
}
BENCHMARK(BM_AsymptoticTotal)->Unit(benchmark::kMicrosecond);

}  // namespace
