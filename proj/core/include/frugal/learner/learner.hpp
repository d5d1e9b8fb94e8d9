#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "frugal/core/problem.hpp"
#include "frugal/core/types.hpp"

namespace frugal::learner {

struct LearnerConfig {
  double epsilon = 15.0;
  double delta = 0.25;
  double zeta = 0.05;
  std::uint64_t seed = 0;
  /// Largest round index the learner may start.
  std::uint64_t max_rounds = 40;
  std::size_t max_samples_per_round = std::size_t{1} << 23;
  /// Collapse entries whose cells coincide when emitting parameters.
  bool dedup = false;

  /// Throws std::invalid_argument on out-of-range fields.
  void validate() const;
};

/// min{(fourth_root(1 + epsilon) - 1) / 8, 1/9}. Throws std::invalid_argument
/// ("epsilon must be positive") for epsilon <= 0.
double compute_eta(double epsilon);

/// Thrown when a round needs more samples than the configured limit.
class SampleLimitError : public std::runtime_error {
 public:
  SampleLimitError(std::uint64_t round, std::size_t samples, double last_gamma, double target);

  std::uint64_t round() const noexcept { return round_; }
  double last_gamma() const noexcept { return last_gamma_; }

 private:
  std::uint64_t round_;
  double last_gamma_;
};

struct GrownSample {
  std::vector<InstanceHandle> instances;
  /// f(S_t, 2^t) and gamma at the final size.
  std::uint64_t f_value = 1;
  double gamma = 0.0;
};

/// Draws instances one at a time until gamma(t, |S|, 2^t) <= eta * delta,
/// rechecking the bound with f recomputed after every draw.
GrownSample grow_sample(ConfigProblem& problem, std::uint64_t t, const LearnerConfig& cfg, Rng& rng);

struct SubsetEntry {
  ParamCell cell;
  double z = 0.0;
  std::uint64_t round = 0;
  Budget tau_prime = 0;
  double t_prime = 0.0;
};

struct LearnerState {
  std::uint64_t t = 1;
  double T = std::numeric_limits<double>::infinity();
  std::vector<SubsetEntry> good;
};

/// Admits every cell with z >= 1 - 3 delta / 8, records its tail cutoff and
/// capped mean, and lowers T. Returns the number of admitted cells.
std::size_t process_round(LearnerState& state, std::span<const PartitionCell> cells,
                          std::size_t sample_count, const LearnerConfig& cfg);

/// The floor(count * (1 - 3 delta / 8))-th order statistic used above.
/// Throws std::invalid_argument("sample too small for quantile index") when
/// that rank is 0.
std::size_t quantile_rank(std::size_t count, double keep_fraction);

struct TraceRow {
  std::uint64_t t = 0;
  Budget cap = 0;
  std::size_t samples = 0;
  std::size_t cells = 0;
  std::size_t admitted = 0;
  /// T after the round.
  double T = std::numeric_limits<double>::infinity();
  std::uint64_t f_value = 0;
  double gamma = 0.0;
};

struct OptimalSubsetResult {
  std::vector<ParamPoint> parameters;
  /// entries[i] produced parameters[i].
  std::vector<SubsetEntry> entries;
  /// One row per executed round followed by a terminal row for t_bar with
  /// zero samples.
  std::vector<TraceRow> trace;
  std::uint64_t t_bar = 0;
  double T_bar = std::numeric_limits<double>::infinity();
  double eta = 0.0;
  /// Total instances drawn, i.e. the sum of |S_t|.
  std::uint64_t oracle_calls = 0;
};

/// Called after each executed round with that round's trace row.
using RoundCallback = std::function<void(const TraceRow&)>;

OptimalSubsetResult learn_subset(ConfigProblem& problem, const LearnerConfig& cfg,
                                 const RoundCallback& on_round = {});

}  // namespace frugal::learner
