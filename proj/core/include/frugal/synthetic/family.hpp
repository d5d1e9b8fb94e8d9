#pragma once

#include <array>
#include <span>
#include <vector>

#include "frugal/core/problem.hpp"
#include "frugal/core/tail.hpp"
#include "frugal/core/types.hpp"

namespace frugal::synthetic {

/// Worst-case family with three regions of rho. Inside (a, b) every instance
/// has loss L_mid. For rho <= a an instance has loss L_low when its low coin
/// is heavy, else L_mid; for rho >= b it has L_high when its high coin is
/// heavy, else L_mid. Each coin is heavy with probability 1/2.
///
/// L_low and L_high stand for 2^((n-5)/4) and 2^((n-4)/2) of an n-variable
/// MILP family; the defaults correspond to n = 21 and n = 20.
struct SyntheticFamily {
  double a = 0.35;
  double b = 0.45;
  Budget L_mid = 8;
  Budget L_low = 16;
  Budget L_high = 256;

  /// Throws std::invalid_argument unless 1/3 < a < b < 1/2 and
  /// 0 < L_mid < L_low < L_high.
  void validate() const;
};

struct SyntheticInstance {
  bool low_heavy = false;
  bool high_heavy = false;

  friend bool operator==(const SyntheticInstance&, const SyntheticInstance&) = default;
};

enum class Region : std::uint8_t { low, middle, high };

inline constexpr std::array<Region, 3> kRegions{Region::low, Region::middle, Region::high};

Region region_of(const SyntheticFamily& family, double rho);

SyntheticInstance synthetic_sample(Rng& rng);

InstanceHandle encode(const SyntheticInstance& instance, std::uint64_t id);
/// Throws std::invalid_argument for handles of another domain.
SyntheticInstance decode(const InstanceHandle& handle);

Budget synthetic_loss(const SyntheticFamily& family, double rho, const SyntheticInstance& instance);

CappedRunOutcome synthetic_run_with_cap(const SyntheticFamily& family, double rho,
                                        const SyntheticInstance& instance, Budget tau);

/// The three cells [0, a'), [a', b), [b, 1] with a' the double just above a,
/// so a itself falls in the left cell.
std::vector<PartitionCell> synthetic_partition(const SyntheticFamily& family,
                                               std::span<const SyntheticInstance> instances,
                                               Budget tau);

/// Loss distribution of a region under the coin law.
LossLaw region_law(const SyntheticFamily& family, Region region);

/// t_delta(rho) computed on the exact law of rho's region.
Budget exact_t_delta(const SyntheticFamily& family, double rho, double delta);

/// E[min{loss(rho), cap}] under the exact law.
double exact_capped_loss(const SyntheticFamily& family, double rho, Budget cap);

struct ExactOpt {
  double opt_quarter = 0.0;
  std::array<Budget, 3> t_quarter{};      // indexed by Region
  std::array<double, 3> capped_mean{};    // E[min{loss, t_quarter}] per region
};

/// OPT_{delta/4} and its per-region ingredients.
ExactOpt synthetic_exact_opt(const SyntheticFamily& family, double delta);

class SyntheticProblem final : public ConfigProblem {
 public:
  explicit SyntheticProblem(SyntheticFamily family);

  const SyntheticFamily& family() const noexcept { return family_; }

  std::string name() const override { return "synthetic"; }
  const ParamSpace& space() const override { return space_; }
  InstanceHandle sample(Rng& rng) override;
  CappedRunOutcome run_with_cap(const ParamPoint& rho, const InstanceHandle& instance,
                                Budget tau) const override;
  std::vector<PartitionCell> get_partition(std::span<const InstanceHandle> instances,
                                           Budget tau) const override;
  /// Always 3.
  std::uint64_t f_bound(std::span<const InstanceHandle> instances, Budget tau) const override;
  std::unique_ptr<FBoundTracker> f_tracker(Budget tau) const override;

 private:
  SyntheticFamily family_;
  ParamSpace space_{1};
  std::uint64_t next_id_ = 0;
};

}  // namespace frugal::synthetic
