#include "frugal/core/tail.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <stdexcept>

namespace frugal {

namespace {

void validate_law(const LossLaw& law) {
  if (law.empty()) throw std::invalid_argument("degenerate distribution");
  double total = 0.0;
  for (const auto& m : law) {
    if (!(m.probability >= 0.0)) throw std::invalid_argument("negative probability mass");
    total += m.probability;
  }
  if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("probabilities do not sum to 1");
}

}  // namespace

Budget tail_quantile_exact(const LossLaw& law, double delta) {
  validate_law(law);
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0,1)");

  LossLaw sorted;
  std::copy_if(law.begin(), law.end(), std::back_inserter(sorted),
               [](const LossMass& m) { return m.probability > 0.0; });
  std::sort(sorted.begin(), sorted.end(),
            [](const LossMass& a, const LossMass& b) { return a.loss < b.loss; });

  // Pr[loss >= tau] only drops just past a support point, so the answer is the
  // largest support value whose upper tail still carries delta.
  double tail = 0.0;
  for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
    tail += it->probability;
    const bool last_of_value = std::next(it) == sorted.rend() || std::next(it)->loss != it->loss;
    if (last_of_value && tail >= delta) return it->loss;
  }
  // Every tau <= smallest loss has Pr[loss >= tau] = 1 >= delta.
  return sorted.front().loss;
}

double exact_capped_mean(const LossLaw& law, Budget cap) {
  validate_law(law);
  double mean = 0.0;
  for (const auto& m : law) mean += m.probability * static_cast<double>(std::min(m.loss, cap));
  return mean;
}

double capped_mean(std::span<const Budget> losses, Budget cap) {
  if (losses.empty()) throw std::invalid_argument("capped_mean of an empty vector");
  long double sum = 0.0L;
  for (Budget l : losses) sum += static_cast<long double>(std::min(l, cap));
  return static_cast<double>(sum / static_cast<long double>(losses.size()));
}

}  // namespace frugal
