#include "frugal/core/tracking.hpp"

#include <algorithm>

namespace frugal {

std::vector<PartitionCell> refine_partitions(const std::vector<const OutcomeCells*>& per_instance,
                                             const std::vector<std::size_t>& instance_of,
                                             double lower, double upper) {
  std::vector<double> starts{lower};
  for (const OutcomeCells* cells : per_instance) {
    if (cells == nullptr || cells->empty()) {
      throw std::invalid_argument("refine_partitions: missing per-instance partition");
    }
    for (const auto& c : *cells) {
      if (c.interval.lo != lower) starts.push_back(c.interval.lo);
    }
  }
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());

  const std::size_t cell_count = starts.size();
  // outcome[k][c]: outcome of partition k on refined cell c.
  std::vector<std::vector<CappedRunOutcome>> outcome(per_instance.size());
  for (std::size_t k = 0; k < per_instance.size(); ++k) {
    const OutcomeCells& cells = *per_instance[k];
    outcome[k].resize(cell_count);
    std::size_t src = 0;
    for (std::size_t c = 0; c < cell_count; ++c) {
      while (src + 1 < cells.size() && cells[src + 1].interval.lo <= starts[c]) ++src;
      outcome[k][c] = cells[src].result;
    }
  }

  std::vector<PartitionCell> result(cell_count);
  const std::size_t n = instance_of.size();
  for (std::size_t c = 0; c < cell_count; ++c) {
    PartitionCell& pc = result[c];
    const bool last = c + 1 == cell_count;
    pc.cell.intervals.push_back(Interval{starts[c], last ? upper : starts[c + 1], last});
    pc.cell.label = "cell-" + std::to_string(c);
    pc.capped_losses.resize(n);
    std::size_t solved = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const CappedRunOutcome& o = outcome[instance_of[i]][c];
      pc.capped_losses[i] = o.capped_loss();
      solved += o.solved;
    }
    pc.z = n == 0 ? 0.0 : static_cast<double>(solved) / static_cast<double>(n);
  }
  return result;
}

}  // namespace frugal
