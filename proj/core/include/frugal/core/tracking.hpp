#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "frugal/core/rho_probe.hpp"
#include "frugal/core/types.hpp"

namespace frugal {

/// Minimum admissible width of a tracked cell.
inline constexpr double kMinCellWidth = 1e-12;

template <class Result>
struct TrackedCell {
  Interval interval;
  Result result;
};

/// Splits [lower, upper] into maximal intervals on which `run` makes the same
/// rho-dependent decisions. `run(RhoProbe&)` must route every such decision
/// through the probe. Each run starts at the left end of the unresolved
/// remainder; the probe reports how far to the right its decisions hold.
/// Throws DegenerateTieError(`degenerate_message`) if a cell narrower than
/// kMinCellWidth appears.
template <class Result, class Run>
std::vector<TrackedCell<Result>> track_cells(double lower, double upper, Run&& run,
                                             const std::string& degenerate_message) {
  std::vector<TrackedCell<Result>> cells;
  double cur = lower;
  while (true) {
    RhoProbe probe = RhoProbe::tracking(cur, upper);
    Result result;
    try {
      result = run(probe);
    } catch (const DegenerateTieError&) {
      throw DegenerateTieError(degenerate_message);
    }
    const double right = probe.right();
    const bool last = right >= upper;
    if (!last && !(right - cur >= kMinCellWidth)) throw DegenerateTieError(degenerate_message);
    cells.push_back({Interval{cur, last ? upper : right, last}, std::move(result)});
    if (last) break;
    cur = right;
  }
  return cells;
}

/// Per-instance outcome cells produced by a domain's partition routine.
using OutcomeCells = std::vector<TrackedCell<CappedRunOutcome>>;

/// Common refinement of several per-instance partitions of the same interval.
/// `per_instance[k]` covers [lower, upper]; `instance_of[i]` names which
/// partition the i-th requested instance uses. The returned cells carry one
/// capped loss per requested instance, in request order.
std::vector<PartitionCell> refine_partitions(const std::vector<const OutcomeCells*>& per_instance,
                                             const std::vector<std::size_t>& instance_of,
                                             double lower, double upper);

}  // namespace frugal
