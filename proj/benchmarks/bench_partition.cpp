#include <benchmark/benchmark.h>

#include "frugal/bnb/lp.hpp"
#include "frugal/bnb/partition.hpp"
#include "frugal/clustering/instance.hpp"
#include "frugal/clustering/partition.hpp"
#include "frugal/clustering/pruning.hpp"

namespace {

using namespace frugal;

void BM_BnbInstanceCells(benchmark::State& state) {
  Rng rng(3);
  std::vector<bnb::Milp> milps;
  for (int i = 0; i < 16; ++i) milps.push_back(bnb::random_milp(rng, 6, 3));
  const auto tau = static_cast<Budget>(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) {
    const bnb::LpOracle oracle(milps[i++ % milps.size()]);
    benchmark::DoNotOptimize(bnb::bnb_instance_cells(oracle, tau));
  }
}
BENCHMARK(BM_BnbInstanceCells)->Arg(7)->Arg(31)->Arg(127);

void BM_LinkageCells(benchmark::State& state) {
  Rng rng(4);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<clustering::ClusteringInstance> insts;
  for (int i = 0; i < 16; ++i) insts.push_back(clustering::random_metric(rng, n, 2));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& inst = insts[i++ % insts.size()];
    benchmark::DoNotOptimize(clustering::clustering_instance_cells(inst, inst.n - 1));
  }
}
BENCHMARK(BM_LinkageCells)->Arg(4)->Arg(8)->Arg(12);

void BM_BestPruning(benchmark::State& state) {
  Rng rng(5);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = clustering::random_metric(rng, n, 3);
  const auto forest = clustering::capped_linkage_run(inst, 0.5, n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(clustering::best_pruning(forest, 3, inst));
}
BENCHMARK(BM_BestPruning)->Arg(4)->Arg(8)->Arg(12);

}  // namespace
