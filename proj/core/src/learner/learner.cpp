#include "frugal/learner/learner.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "frugal/core/tail.hpp"
#include "frugal/stats/concentration.hpp"

namespace frugal::learner {

namespace {

std::string describe_limit(std::uint64_t round, std::size_t samples, double gamma, double target) {
  return "round " + std::to_string(round) + ": sample limit " + std::to_string(samples) +
         " reached with gamma = " + std::to_string(gamma) + " > eta*delta = " +
         std::to_string(target);
}

}  // namespace

void LearnerConfig::validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("epsilon must be positive");
  }
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0,1)");
  if (!(zeta > 0.0 && zeta < 1.0)) throw std::invalid_argument("zeta must lie in (0,1)");
  if (max_rounds < 1 || max_rounds > 62) {
    throw std::invalid_argument("max_rounds must lie in [1, 62]");
  }
  if (max_samples_per_round < 1) throw std::invalid_argument("max_samples_per_round must be >= 1");
}

double compute_eta(double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  return std::min((std::pow(1.0 + epsilon, 0.25) - 1.0) / 8.0, 1.0 / 9.0);
}

SampleLimitError::SampleLimitError(std::uint64_t round, std::size_t samples, double last_gamma,
                                   double target)
    : std::runtime_error(describe_limit(round, samples, last_gamma, target)),
      round_(round),
      last_gamma_(last_gamma) {}

GrownSample grow_sample(ConfigProblem& problem, std::uint64_t t, const LearnerConfig& cfg,
                        Rng& rng) {
  if (t < 1) throw std::invalid_argument("grow_sample: round must be >= 1");
  const Budget cap = Budget{1} << t;
  const double target = compute_eta(cfg.epsilon) * cfg.delta;
  const auto tracker = problem.f_tracker(cap);
  stats::GammaInputs in;
  in.round = t;
  in.cap = cap;
  in.dimension = problem.space().dimension();
  in.zeta = cfg.zeta;

  GrownSample out;
  while (true) {
    out.instances.push_back(problem.sample(rng));
    out.f_value = tracker->add(out.instances.back());
    in.samples = out.instances.size();
    in.f_value = out.f_value;
    out.gamma = stats::gamma_bound(in);
    if (out.gamma <= target) return out;
    if (out.instances.size() >= cfg.max_samples_per_round) {
      throw SampleLimitError(t, out.instances.size(), out.gamma, target);
    }
  }
}

std::size_t quantile_rank(std::size_t count, double keep_fraction) {
  // The slack keeps products such as 100 * 0.9 from flooring to 89.
  const auto rank =
      static_cast<std::size_t>(std::floor(static_cast<double>(count) * keep_fraction + 1e-9));
  if (rank < 1) throw std::invalid_argument("sample too small for quantile index");
  return std::min(rank, count);
}

std::size_t process_round(LearnerState& state, std::span<const PartitionCell> cells,
                          std::size_t sample_count, const LearnerConfig& cfg) {
  const double keep = 1.0 - 3.0 * cfg.delta / 8.0;
  const std::size_t rank = quantile_rank(sample_count, keep);
  std::size_t admitted = 0;
  std::vector<Budget> sorted;
  for (const auto& cell : cells) {
    if (cell.z < keep) continue;
    if (cell.capped_losses.size() != sample_count) {
      throw std::invalid_argument("process_round: capped-loss vector size mismatch");
    }
    sorted = cell.capped_losses;
    std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(rank - 1),
                     sorted.end());
    SubsetEntry entry;
    entry.cell = cell.cell;
    entry.z = cell.z;
    entry.round = state.t;
    entry.tau_prime = sorted[rank - 1];
    entry.t_prime = capped_mean(sorted, entry.tau_prime);
    state.T = std::min(state.T, entry.t_prime);
    state.good.push_back(std::move(entry));
    ++admitted;
  }
  return admitted;
}

OptimalSubsetResult learn_subset(ConfigProblem& problem, const LearnerConfig& cfg,
                                 const RoundCallback& on_round) {
  cfg.validate();
  Rng rng(cfg.seed);
  OptimalSubsetResult result;
  result.eta = compute_eta(cfg.epsilon);
  LearnerState state;

  while (std::ldexp(cfg.delta, static_cast<int>(state.t) - 3) < state.T) {
    if (state.t > cfg.max_rounds) {
      if (std::isinf(state.T)) {
        throw std::runtime_error("no region ever admitted within " +
                                 std::to_string(cfg.max_rounds) + " rounds");
      }
      throw std::runtime_error("round limit " + std::to_string(cfg.max_rounds) +
                               " reached before the stopping rule held");
    }
    const Budget cap = Budget{1} << state.t;
    GrownSample sample = grow_sample(problem, state.t, cfg, rng);
    const auto cells = problem.get_partition(sample.instances, cap);

    TraceRow row;
    row.t = state.t;
    row.cap = cap;
    row.samples = sample.instances.size();
    row.cells = cells.size();
    row.admitted = process_round(state, cells, sample.instances.size(), cfg);
    row.T = state.T;
    row.f_value = sample.f_value;
    row.gamma = sample.gamma;
    result.oracle_calls += sample.instances.size();
    result.trace.push_back(row);
    if (on_round) on_round(row);
    ++state.t;
  }

  result.t_bar = state.t;
  result.T_bar = state.T;
  TraceRow terminal;
  terminal.t = state.t;
  terminal.cap = Budget{1} << state.t;
  terminal.T = state.T;
  result.trace.push_back(terminal);

  for (auto& entry : state.good) {
    if (cfg.dedup) {
      const bool seen = std::any_of(result.entries.begin(), result.entries.end(),
                                    [&](const SubsetEntry& e) {
                                      return e.cell.intervals == entry.cell.intervals;
                                    });
      if (seen) continue;
    }
    result.parameters.push_back(ParamPoint::scalar(entry.cell.representative()));
    result.entries.push_back(std::move(entry));
  }
  return result;
}

}  // namespace frugal::learner
