#include <benchmark/benchmark.h>

#include "frugal/core/types.hpp"
#include "frugal/stats/concentration.hpp"

namespace {

using namespace frugal;

void BM_GammaBound(benchmark::State& state) {
  stats::GammaInputs in;
  in.round = 5;
  in.samples = 100000;
  in.cap = 32;
  in.f_value = 17;
  in.dimension = 1;
  in.zeta = 0.05;
  for (auto _ : state) {
    in.samples += 1;
    benchmark::DoNotOptimize(stats::gamma_bound(in));
  }
}
BENCHMARK(BM_GammaBound);

std::vector<std::vector<double>> random_set(std::size_t k, std::size_t n) {
  Rng rng(k * 7 + n);
  std::vector<std::vector<double>> set(k, std::vector<double>(n));
  for (auto& v : set) {
    for (auto& x : v) x = uniform_unit(rng) * 16.0;
  }
  return set;
}

void BM_RademacherExact(benchmark::State& state) {
  const auto set = random_set(8, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(stats::mc_rademacher(set, 1, 0));
}
BENCHMARK(BM_RademacherExact)->Arg(8)->Arg(14)->Arg(20);

void BM_RademacherSampled(benchmark::State& state) {
  const auto set = random_set(8, 256);
  const auto trials = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(stats::mc_rademacher(set, trials, 3));
}
BENCHMARK(BM_RademacherSampled)->Arg(100)->Arg(1000);

void BM_Massart(benchmark::State& state) {
  const auto set = random_set(static_cast<std::size_t>(state.range(0)), 256);
  for (auto _ : state) benchmark::DoNotOptimize(stats::massart_bound(set));
}
BENCHMARK(BM_Massart)->Arg(8)->Arg(64);

}  // namespace
