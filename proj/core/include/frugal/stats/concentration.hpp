#pragma once

#include <cstdint>
#include <vector>

namespace frugal::stats {

/// Inputs of the per-round sample-accuracy bound.
struct GammaInputs {
  std::uint64_t round = 1;    // t
  std::uint64_t samples = 1;  // b
  std::uint64_t cap = 1;      // tau
  std::uint64_t f_value = 1;  // f({j_1..j_b}, tau)
  std::uint64_t dimension = 1;
  double zeta = 0.05;
};

/// sqrt(2 d ln f / b) + 2 sqrt((2/b) ln(8 (tau b t)^2 / zeta)), with the
/// second logarithm expanded in log space so large products never overflow.
/// Throws std::invalid_argument on zero counts or zeta outside (0,1).
double gamma_bound(const GammaInputs& in);

/// Massart's finite-class bound r sqrt(2 ln |set|) / N on the empirical
/// Rademacher complexity, where r is the largest Euclidean norm. Duplicate
/// vectors are counted once.
double massart_bound(const std::vector<std::vector<double>>& vectors);

/// Vector length up to which mc_rademacher enumerates every sign pattern.
inline constexpr std::size_t kExactRademacherMaxLength = 20;

/// E_sigma[ max_v (1/N) sum_i sigma_i v_i ]. Exact enumeration of all 2^N
/// sign patterns when N <= kExactRademacherMaxLength, otherwise the mean over
/// `trials` sampled patterns.
double mc_rademacher(const std::vector<std::vector<double>>& vectors, std::uint64_t trials,
                     std::uint64_t seed);

}  // namespace frugal::stats
