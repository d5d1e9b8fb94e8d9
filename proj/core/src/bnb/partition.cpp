#include "frugal/bnb/partition.hpp"

#include <limits>
#include <memory>
#include <set>

namespace frugal::bnb {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

}  // namespace

OutcomeCells bnb_instance_cells(const LpOracle& oracle, Budget tau) {
  return track_cells<CappedRunOutcome>(
      0.0, 1.0, [&](RhoProbe& probe) { return bnb_execute(oracle, probe, tau).outcome; },
      kDegenerateBreakpoints);
}

std::vector<PartitionCell> bnb_partition(std::span<const Milp> instances, Budget tau) {
  std::vector<OutcomeCells> cells;
  cells.reserve(instances.size());
  for (const auto& milp : instances) cells.push_back(bnb_instance_cells(LpOracle(milp), tau));
  if (instances.empty()) {
    PartitionCell whole;
    whole.cell.intervals.push_back(Interval{0.0, 1.0, true});
    whole.cell.label = "cell-0";
    return {whole};
  }
  std::vector<const OutcomeCells*> parts;
  std::vector<std::size_t> instance_of;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    parts.push_back(&cells[i]);
    instance_of.push_back(i);
  }
  return refine_partitions(parts, instance_of, 0.0, 1.0);
}

std::uint64_t f_bound_bnb_analytic(std::size_t instance_count, std::size_t n, Budget tau) {
  std::uint64_t power = n <= 1 ? n : 1;
  const std::uint64_t exponent = saturating_mul(2, tau + 1);
  for (std::uint64_t e = 0; n > 1 && e < exponent && power != std::numeric_limits<std::uint64_t>::max();
       ++e) {
    power = saturating_mul(power, n);
  }
  const std::uint64_t total = saturating_mul(instance_count, power);
  return total == std::numeric_limits<std::uint64_t>::max() ? total : total + 1;
}

std::uint64_t f_bound_bnb(std::span<const Milp> instances, Budget tau) {
  std::set<double> breakpoints;
  for (const auto& milp : instances) {
    for (const auto& c : bnb_instance_cells(LpOracle(milp), tau)) {
      if (c.interval.lo != 0.0) breakpoints.insert(c.interval.lo);
    }
  }
  return breakpoints.size() + 1;
}

}  // namespace frugal::bnb
