#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "frugal/bnb/branch_and_bound.hpp"
#include "frugal/core/tracking.hpp"

namespace frugal::bnb {

inline constexpr const char* kDegenerateBreakpoints = "degenerate breakpoint cluster";

/// Exact split of [0,1] into intervals on which the capped search makes the
/// same branching decisions on this instance.
OutcomeCells bnb_instance_cells(const LpOracle& oracle, Budget tau);

/// Common refinement of the per-instance splits, with one capped loss per
/// instance in input order.
std::vector<PartitionCell> bnb_partition(std::span<const Milp> instances, Budget tau);

/// |S| * n^(2(tau+1)) + 1, saturating at UINT64_MAX.
std::uint64_t f_bound_bnb_analytic(std::size_t instance_count, std::size_t n, Budget tau);

/// Number of cells of bnb_partition(instances, tau): distinct interior
/// breakpoints over all instances, plus one.
std::uint64_t f_bound_bnb(std::span<const Milp> instances, Budget tau);

}  // namespace frugal::bnb
