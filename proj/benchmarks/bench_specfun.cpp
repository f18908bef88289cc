#include <benchmark/benchmark.h>

#include "afq/specfun.hpp"

namespace {

void BM_Si(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0)) * 0.37;
  for (auto _ : state) benchmark::DoNotOptimize(afq::specfun::si(x));
}
BENCHMARK(BM_Si)->Arg(1)->Arg(10)->Arg(1000);

void BM_Ci(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0)) * 0.37;
  for (auto _ : state) benchmark::DoNotOptimize(afq::specfun::ci(x));
}
BENCHMARK(BM_Ci)->Arg(1)->Arg(10)->Arg(1000);

void BM_BesselJ0(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0)) * 0.37;
  for (auto _ : state) benchmark::DoNotOptimize(afq::specfun::bessel_j0(x));
}
BENCHMARK(BM_BesselJ0)->Arg(1)->Arg(10)->Arg(1000);

}  // namespace
