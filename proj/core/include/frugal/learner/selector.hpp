#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "frugal/core/problem.hpp"
#include "frugal/core/types.hpp"

namespace frugal::learner {

/// eps' = sqrt(1 + eps) - 1.
double selection_epsilon(double epsilon);
/// delta' = delta / 2.
double selection_delta(double delta);
/// Default cap ceiling for a selector chained after a learner run: 2^(t_bar + 4).
Budget default_ceiling(std::uint64_t t_bar);

struct SelectionConfig {
  double eps_prime = 0.0;
  double delta_prime = 0.125;
  std::size_t n_samples = 1000;
  Budget ceiling = 1024;
  unsigned threads = 1;
};

struct SelectionResult {
  std::size_t index = 0;
  ParamPoint parameter;
  /// Per candidate: mean of min{loss, q} and the cutoff q.
  std::vector<double> estimates;
  std::vector<Budget> cutoffs;
  std::uint64_t oracle_calls = 0;
};

/// For each candidate, draws n_samples fresh instances, measures each loss by
/// running under caps 1, 2, 4, ... up to the ceiling (an unsolved run counts
/// as the ceiling), takes q as the floor(n (1 - delta'))-th smallest loss, and
/// scores the candidate by the mean of min{loss, q}. Returns the lowest score,
/// ties to the lowest index.
SelectionResult select_finite(ConfigProblem& problem, std::span<const ParamPoint> candidates,
                              const SelectionConfig& cfg, Rng& rng);

}  // namespace frugal::learner
