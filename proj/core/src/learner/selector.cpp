#include "frugal/learner/selector.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>

#include "frugal/core/parallel.hpp"
#include "frugal/core/tail.hpp"
#include "frugal/learner/learner.hpp"

namespace frugal::learner {

double selection_epsilon(double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  return std::sqrt(1.0 + epsilon) - 1.0;
}

double selection_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0,1)");
  return delta / 2.0;
}

Budget default_ceiling(std::uint64_t t_bar) {
  if (t_bar + 4 > 63) throw std::invalid_argument("t_bar too large for a ceiling");
  return Budget{1} << (t_bar + 4);
}

SelectionResult select_finite(ConfigProblem& problem, std::span<const ParamPoint> candidates,
                              const SelectionConfig& cfg, Rng& rng) {
  if (candidates.empty()) throw std::invalid_argument("select_finite: no candidates");
  if (cfg.n_samples == 0) throw std::invalid_argument("select_finite: n_samples must be >= 1");
  if (cfg.ceiling < 1) throw std::invalid_argument("select_finite: ceiling must be >= 1");
  if (!(cfg.delta_prime > 0.0 && cfg.delta_prime < 1.0)) {
    throw std::invalid_argument("select_finite: delta' must lie in (0,1)");
  }
  const std::size_t rank = quantile_rank(cfg.n_samples, 1.0 - cfg.delta_prime);
  for (const auto& c : candidates) problem.space().require(c);

  SelectionResult result;
  std::vector<InstanceHandle> draws(cfg.n_samples);
  std::vector<Budget> losses(cfg.n_samples);
  std::atomic<std::uint64_t> calls{0};
  for (const auto& candidate : candidates) {
    for (auto& h : draws) h = problem.sample(rng);
    parallel_for(cfg.n_samples, cfg.threads, [&](std::size_t i) {
      Budget cap = 1;
      std::uint64_t local = 0;
      while (true) {
        const Budget step = std::min(cap, cfg.ceiling);
        const CappedRunOutcome o = problem.run_with_cap(candidate, draws[i], step);
        ++local;
        if (o.solved) {
          losses[i] = o.budget_used;
          break;
        }
        if (step == cfg.ceiling) {
          losses[i] = cfg.ceiling;
          break;
        }
        cap = step * 2;
      }
      calls += local;
    });
    std::vector<Budget> sorted = losses;
    std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(rank - 1),
                     sorted.end());
    const Budget q = sorted[rank - 1];
    result.cutoffs.push_back(q);
    result.estimates.push_back(capped_mean(losses, q));
  }
  result.index = static_cast<std::size_t>(
      std::min_element(result.estimates.begin(), result.estimates.end()) -
      result.estimates.begin());
  result.parameter = candidates[result.index];
  result.oracle_calls = calls.load();
  return result;
}

}  // namespace frugal::learner
