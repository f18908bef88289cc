#include <benchmark/benchmark.h>

#include "afq/dfs.hpp"

namespace {

void BM_Spectrum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(afq::dfs::spectrum(100.0, 1.0));
}
BENCHMARK(BM_Spectrum)->Unit(benchmark::kMicrosecond);

void BM_DfsReport(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(afq::dfs::dfs_report(100.0, 1.0));
}
BENCHMARK(BM_DfsReport)->Unit(benchmark::kMicrosecond);

}  // namespace
