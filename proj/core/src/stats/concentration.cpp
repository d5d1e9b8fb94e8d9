#include "frugal/stats/concentration.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "frugal/core/types.hpp"

namespace frugal::stats {

namespace {

void require_equal_lengths(const std::vector<std::vector<double>>& vectors) {
  if (vectors.empty()) throw std::invalid_argument("empty vector set");
  const std::size_t n = vectors.front().size();
  if (n == 0) throw std::invalid_argument("zero-length vectors");
  for (const auto& v : vectors) {
    if (v.size() != n) throw std::invalid_argument("vector length mismatch");
  }
}

}  // namespace

double gamma_bound(const GammaInputs& in) {
  if (in.round == 0 || in.samples == 0 || in.cap == 0 || in.f_value == 0 || in.dimension == 0) {
    throw std::invalid_argument("gamma_bound needs positive round, samples, cap, f and dimension");
  }
  if (!(in.zeta > 0.0 && in.zeta < 1.0)) throw std::invalid_argument("zeta must lie in (0,1)");

  const double b = static_cast<double>(in.samples);
  const double d = static_cast<double>(in.dimension);
  const double class_term = std::sqrt(2.0 * d * std::log(static_cast<double>(in.f_value)) / b);
  const double log_product = std::log(static_cast<double>(in.cap)) + std::log(b) +
                             std::log(static_cast<double>(in.round));
  const double confidence_log = std::log(8.0) + 2.0 * log_product - std::log(in.zeta);
  return class_term + 2.0 * std::sqrt(2.0 / b * confidence_log);
}

double massart_bound(const std::vector<std::vector<double>>& vectors) {
  require_equal_lengths(vectors);
  auto distinct = vectors;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  double r = 0.0;
  for (const auto& v : distinct) {
    double sq = 0.0;
    for (double x : v) sq += x * x;
    r = std::max(r, std::sqrt(sq));
  }
  const double n = static_cast<double>(vectors.front().size());
  return r * std::sqrt(2.0 * std::log(static_cast<double>(distinct.size()))) / n;
}

double mc_rademacher(const std::vector<std::vector<double>>& vectors, std::uint64_t trials,
                     std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("mc_rademacher needs at least one trial");
  require_equal_lengths(vectors);
  const std::size_t n = vectors.front().size();
  const std::size_t k = vectors.size();

  if (n <= kExactRademacherMaxLength) {
    // Gray-code walk: each step flips one sign, so each correlation updates in
    // O(1). Start from all signs +1.
    std::vector<double> corr(k, 0.0);
    for (std::size_t c = 0; c < k; ++c) {
      for (double x : vectors[c]) corr[c] += x;
    }
    std::vector<int> sign(n, 1);
    long double total = *std::max_element(corr.begin(), corr.end());
    const std::uint64_t patterns = std::uint64_t{1} << n;
    for (std::uint64_t step = 1; step < patterns; ++step) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(step));
      sign[bit] = -sign[bit];
      double best = -std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < k; ++c) {
        corr[c] += 2.0 * sign[bit] * vectors[c][bit];
        best = std::max(best, corr[c]);
      }
      total += best;
    }
    return static_cast<double>(total / static_cast<long double>(patterns) / n);
  }

  Rng rng(seed);
  long double total = 0.0L;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    double best = -std::numeric_limits<double>::infinity();
    std::vector<int> sign(n);
    for (auto& s : sign) s = (rng() & 1u) ? 1 : -1;
    for (const auto& v : vectors) {
      double c = 0.0;
      for (std::size_t i = 0; i < n; ++i) c += sign[i] * v[i];
      best = std::max(best, c);
    }
    total += best;
  }
  return static_cast<double>(total / static_cast<long double>(trials) / n);
}

}  // namespace frugal::stats
