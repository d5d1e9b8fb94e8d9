#include <benchmark/benchmark.h>

#include "frugal/learner/learner.hpp"
#include "frugal/learner/selector.hpp"
#include "frugal/synthetic/family.hpp"

namespace {

using namespace frugal;

void BM_SyntheticLearn(benchmark::State& state) {
  learner::LearnerConfig cfg;
  cfg.delta = static_cast<double>(state.range(0)) / 100.0;
  std::uint64_t calls = 0;
  for (auto _ : state) {
    synthetic::SyntheticProblem problem{synthetic::SyntheticFamily{}};
    const auto r = learner::learn_subset(problem, cfg);
    calls += r.oracle_calls;
    benchmark::DoNotOptimize(r);
  }
  state.counters["oracle_calls"] = benchmark::Counter(double(calls), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_SyntheticLearn)->Arg(25)->Arg(50)->Arg(90)->Unit(benchmark::kMillisecond);

void BM_GrowSample(benchmark::State& state) {
  learner::LearnerConfig cfg;
  const auto t = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    synthetic::SyntheticProblem problem{synthetic::SyntheticFamily{}};
    Rng rng(1);
    benchmark::DoNotOptimize(learner::grow_sample(problem, t, cfg, rng));
  }
}
BENCHMARK(BM_GrowSample)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SelectFinite(benchmark::State& state) {
  synthetic::SyntheticProblem problem{synthetic::SyntheticFamily{}};
  const std::vector<ParamPoint> candidates{ParamPoint::scalar(0.1), ParamPoint::scalar(0.4),
                                           ParamPoint::scalar(0.9)};
  learner::SelectionConfig cfg;
  cfg.threads = static_cast<unsigned>(state.range(0));
  Rng rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(learner::select_finite(problem, candidates, cfg, rng));
}
BENCHMARK(BM_SelectFinite)->Arg(1)->Arg(4);

}  // namespace
