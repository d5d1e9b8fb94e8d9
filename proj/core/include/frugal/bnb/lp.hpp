#pragma once

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "frugal/bnb/milp.hpp"

namespace frugal::bnb {

/// Partial 0/1 assignment: bit i of `fixed` marks variable i as fixed, bit i
/// of `value` gives its value.
struct Fixing {
  std::uint32_t fixed = 0;
  std::uint32_t value = 0;

  bool is_fixed(std::size_t i) const noexcept { return (fixed >> i) & 1u; }
  Fixing with(std::size_t i, bool one) const noexcept {
    const std::uint32_t bit = std::uint32_t{1} << i;
    return Fixing{fixed | bit, one ? (value | bit) : (value & ~bit)};
  }
  std::uint64_t key() const noexcept { return (std::uint64_t{fixed} << 32) | value; }

  friend bool operator==(const Fixing&, const Fixing&) = default;
};

struct LpSolution {
  enum class Status : std::uint8_t { optimal, infeasible };

  Status status = Status::infeasible;
  /// Optimal value rounded to a multiple of kObjectiveGrid.
  double objective = 0.0;
  /// Full point in [0,1]^n, fixed variables included.
  std::vector<double> x;

  bool optimal() const noexcept { return status == Status::optimal; }
};

/// Granularity LP objectives are rounded to, so that equal objective values
/// reached along different pivot paths compare equal.
inline constexpr double kObjectiveGrid = 0x1.0p-20;

/// Pivot limit of the simplex; exceeding it throws std::runtime_error.
inline constexpr std::size_t kSimplexIterationLimit = 20000;

/// LP relaxation of `milp` with the fixed variables substituted and the rest
/// boxed in [0,1]. Dense two-phase simplex with Bland's rule.
LpSolution lp_relax(const Milp& milp, Fixing fixing);

/// Memoized lp_relax for one instance. Thread-safe.
class LpOracle {
 public:
  explicit LpOracle(Milp milp);

  const Milp& milp() const noexcept { return milp_; }
  LpSolution solve(Fixing fixing) const;
  std::size_t cached() const;

 private:
  Milp milp_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::uint64_t, LpSolution> memo_;
};

}  // namespace frugal::bnb
