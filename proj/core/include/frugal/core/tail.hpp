#pragma once

#include <span>
#include <vector>

#include "frugal/core/types.hpp"

namespace frugal {

struct LossMass {
  Budget loss = 0;
  double probability = 0.0;
};

/// Explicit finite distribution over loss values.
using LossLaw = std::vector<LossMass>;

/// Largest integer cutoff tau with Pr[loss >= tau] >= delta, computed exactly
/// on a finite law. Throws std::invalid_argument on an empty law ("degenerate
/// distribution"), negative masses, masses not summing to 1, or delta outside
/// (0,1).
Budget tail_quantile_exact(const LossLaw& law, double delta);

/// E[min{loss, cap}] under `law`.
double exact_capped_mean(const LossLaw& law, Budget cap);

/// Arithmetic mean of min{loss, cap}. Throws on an empty vector.
double capped_mean(std::span<const Budget> losses, Budget cap);

}  // namespace frugal
