#include <benchmark/benchmark.h>

#include <random>

#include "gog/classify.hpp"
#include "gog/counting.hpp"
#include "gog/normalize.hpp"
#include "gog/oracle.hpp"

namespace {

gog::GraphOfGroups modular() {
  return gog::make_gog({{"a", 2}, {"b", 3}}, {{"s", "a", "b", 1}});
}

void BM_FSeries(benchmark::State& state) {
  const auto g = modular();
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gog::f_series(g, n));
}
BENCHMARK(BM_FSeries)->Arg(20)->Arg(50)->Arg(100);

void BM_Rank2Recurrence(benchmark::State& state) {
  const gog::ClassParams p{{"m", 6}, {"S", 1}};
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gog::f_series_rank2(gog::Rank2Class::III_1, p, n));
  }
}
BENCHMARK(BM_Rank2Recurrence)->Arg(20)->Arg(50)->Arg(100);

void BM_ThetaAndOde(benchmark::State& state) {
  const auto g = modular();
  for (auto _ : state) {
    const auto th = gog::theta_coeffs(g, 30);
    benchmark::DoNotOptimize(gog::ode_check(gog::g_series(g, 31), th, 6));
  }
}
BENCHMARK(BM_ThetaAndOde);

void BM_Normalize(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<gog::GraphOfGroups> data;
  for (int i = 0; i < 64; ++i) data.push_back(gog::oracle::random_gog(rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gog::normalize(data[i++ % data.size()]));
}
BENCHMARK(BM_Normalize);

void BM_Classify(benchmark::State& state) {
  const auto n = gog::normalize(modular()).normalized;
  for (auto _ : state) benchmark::DoNotOptimize(gog::classify(n));
}
BENCHMARK(BM_Classify);

void BM_FreeGroupOracle(benchmark::State& state) {
  const auto degree = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gog::oracle::free_group_subgroup_counts(2, degree));
  }
}
BENCHMARK(BM_FreeGroupOracle)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
