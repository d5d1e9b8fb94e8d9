#include <benchmark/benchmark.h>

#include "frugal/bnb/branch_and_bound.hpp"
#include "frugal/bnb/lp.hpp"

namespace {

using namespace frugal;

std::vector<bnb::Milp> corpus(std::size_t n, std::size_t m) {
  Rng rng(n * 131 + m);
  std::vector<bnb::Milp> out;
  for (int i = 0; i < 32; ++i) out.push_back(bnb::random_milp(rng, n, m));
  return out;
}

void BM_RootRelaxation(benchmark::State& state) {
  const auto milps = corpus(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bnb::lp_relax(milps[i++ % milps.size()], bnb::Fixing{}));
  }
}
BENCHMARK(BM_RootRelaxation)->Args({4, 2})->Args({8, 4})->Args({16, 8})->Args({20, 10});

void BM_BranchAndBound(benchmark::State& state) {
  const auto milps = corpus(static_cast<std::size_t>(state.range(0)), 4);
  std::size_t i = 0;
  for (auto _ : state) {
    // Fresh oracle per run so memoisation does not hide LP cost.
    const bnb::LpOracle oracle(milps[i++ % milps.size()]);
    benchmark::DoNotOptimize(bnb::bnb_solve(oracle, 0.5, bnb::kMaxTreeSize));
  }
}
BENCHMARK(BM_BranchAndBound)->Arg(4)->Arg(8)->Arg(12);

}  // namespace
