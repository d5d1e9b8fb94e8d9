#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "frugal/core/types.hpp"

namespace frugal::bnb {

/// Largest variable count accepted anywhere in this module.
inline constexpr std::size_t kMaxVariables = 20;

/// maximize c.x subject to A x <= b, x in {0,1}^n.
struct Milp {
  std::size_t n = 0;
  std::vector<double> c;
  std::vector<std::vector<double>> A;
  std::vector<double> b;

  std::size_t rows() const noexcept { return A.size(); }
  double objective(const std::vector<double>& x) const;
  bool feasible(const std::vector<double>& x, double tolerance = 1e-9) const;

  /// Throws std::invalid_argument on shape mismatch, non-finite entries or
  /// n outside [1, kMaxVariables].
  void validate() const;
};

/// Text format: `n m`, then n objective coefficients, then m rows of n
/// coefficients followed by `<=` and the right-hand side.
Milp parse_milp(std::istream& in);
Milp parse_milp(const std::string& text);
Milp read_milp(const std::filesystem::path& path);
std::string write_milp(const Milp& milp);

/// Random knapsack-style instance with integer coefficients: c_i in [1, 10],
/// A_ij in [0, 10], and each rhs about half its row sum, so the LP relaxation
/// is rarely integral.
Milp random_milp(Rng& rng, std::size_t n, std::size_t m);

}  // namespace frugal::bnb
