#include "frugal/synthetic/family.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace frugal::synthetic {

namespace {

constexpr std::uint64_t kLowBit = 1;
constexpr std::uint64_t kHighBit = 2;

class ConstantTracker final : public FBoundTracker {
 public:
  std::uint64_t add(const InstanceHandle&) override { return 3; }
};

}  // namespace

void SyntheticFamily::validate() const {
  if (!(1.0 / 3.0 < a && a < b && b < 0.5)) {
    throw std::invalid_argument("synthetic family needs 1/3 < a < b < 1/2");
  }
  if (!(0 < L_mid && L_mid < L_low && L_low < L_high)) {
    throw std::invalid_argument("synthetic family needs 0 < L_mid < L_low < L_high");
  }
}

Region region_of(const SyntheticFamily& family, double rho) {
  if (rho <= family.a) return Region::low;
  if (rho >= family.b) return Region::high;
  return Region::middle;
}

SyntheticInstance synthetic_sample(Rng& rng) {
  const std::uint64_t draw = rng();
  return SyntheticInstance{(draw >> 63) != 0, ((draw >> 62) & 1u) != 0};
}

InstanceHandle encode(const SyntheticInstance& instance, std::uint64_t id) {
  const std::uint64_t payload =
      (instance.low_heavy ? kLowBit : 0) | (instance.high_heavy ? kHighBit : 0);
  return InstanceHandle{Domain::synthetic, id, payload};
}

SyntheticInstance decode(const InstanceHandle& handle) {
  if (handle.domain != Domain::synthetic || handle.payload > (kLowBit | kHighBit)) {
    throw std::invalid_argument("instance handle is not a synthetic instance");
  }
  return SyntheticInstance{(handle.payload & kLowBit) != 0, (handle.payload & kHighBit) != 0};
}

Budget synthetic_loss(const SyntheticFamily& family, double rho, const SyntheticInstance& instance) {
  switch (region_of(family, rho)) {
    case Region::low:
      return instance.low_heavy ? family.L_low : family.L_mid;
    case Region::high:
      return instance.high_heavy ? family.L_high : family.L_mid;
    case Region::middle:
      break;
  }
  return family.L_mid;
}

CappedRunOutcome synthetic_run_with_cap(const SyntheticFamily& family, double rho,
                                        const SyntheticInstance& instance, Budget tau) {
  const Budget loss = synthetic_loss(family, rho, instance);
  return loss <= tau ? CappedRunOutcome::solved_at(loss) : CappedRunOutcome::exceeded(tau);
}

std::vector<PartitionCell> synthetic_partition(const SyntheticFamily& family,
                                               std::span<const SyntheticInstance> instances,
                                               Budget tau) {
  const double a_up = std::nextafter(family.a, std::numeric_limits<double>::infinity());
  const std::array<Interval, 3> intervals{Interval{0.0, a_up, false}, Interval{a_up, family.b, false},
                                          Interval{family.b, 1.0, true}};
  const std::array<double, 3> probes{0.5 * family.a, 0.5 * (family.a + family.b),
                                     0.5 * (family.b + 1.0)};
  std::vector<PartitionCell> cells;
  for (std::size_t r = 0; r < 3; ++r) {
    PartitionCell cell;
    cell.cell.intervals.push_back(intervals[r]);
    cell.cell.label = "cell-" + std::to_string(r);
    std::size_t solved = 0;
    for (const auto& instance : instances) {
      const auto outcome = synthetic_run_with_cap(family, probes[r], instance, tau);
      cell.capped_losses.push_back(outcome.capped_loss());
      if (outcome.solved) ++solved;
    }
    cell.z = instances.empty() ? 0.0
                               : static_cast<double>(solved) / static_cast<double>(instances.size());
    cells.push_back(std::move(cell));
  }
  return cells;
}

LossLaw region_law(const SyntheticFamily& family, Region region) {
  switch (region) {
    case Region::low:
      return {{family.L_mid, 0.5}, {family.L_low, 0.5}};
    case Region::high:
      return {{family.L_mid, 0.5}, {family.L_high, 0.5}};
    case Region::middle:
      break;
  }
  return {{family.L_mid, 1.0}};
}

Budget exact_t_delta(const SyntheticFamily& family, double rho, double delta) {
  return tail_quantile_exact(region_law(family, region_of(family, rho)), delta);
}

double exact_capped_loss(const SyntheticFamily& family, double rho, Budget cap) {
  return exact_capped_mean(region_law(family, region_of(family, rho)), cap);
}

ExactOpt synthetic_exact_opt(const SyntheticFamily& family, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0,1)");
  ExactOpt out;
  out.opt_quarter = std::numeric_limits<double>::infinity();
  for (Region region : kRegions) {
    const auto law = region_law(family, region);
    const auto r = static_cast<std::size_t>(region);
    out.t_quarter[r] = tail_quantile_exact(law, delta / 4.0);
    out.capped_mean[r] = exact_capped_mean(law, out.t_quarter[r]);
    out.opt_quarter = std::min(out.opt_quarter, out.capped_mean[r]);
  }
  return out;
}

SyntheticProblem::SyntheticProblem(SyntheticFamily family) : family_(family) { family_.validate(); }

InstanceHandle SyntheticProblem::sample(Rng& rng) { return encode(synthetic_sample(rng), next_id_++); }

CappedRunOutcome SyntheticProblem::run_with_cap(const ParamPoint& rho,
                                                const InstanceHandle& instance, Budget tau) const {
  space_.require(rho);
  return synthetic_run_with_cap(family_, rho.rho(), decode(instance), tau);
}

std::vector<PartitionCell> SyntheticProblem::get_partition(
    std::span<const InstanceHandle> instances, Budget tau) const {
  std::vector<SyntheticInstance> decoded;
  decoded.reserve(instances.size());
  for (const auto& h : instances) decoded.push_back(decode(h));
  return synthetic_partition(family_, decoded, tau);
}

std::uint64_t SyntheticProblem::f_bound(std::span<const InstanceHandle>, Budget) const { return 3; }

std::unique_ptr<FBoundTracker> SyntheticProblem::f_tracker(Budget) const {
  return std::make_unique<ConstantTracker>();
}

}  // namespace frugal::synthetic
