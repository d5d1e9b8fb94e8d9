#include "frugal/clustering/partition.hpp"

#include <algorithm>

#include "frugal/clustering/pruning.hpp"

namespace frugal::clustering {

namespace {

std::size_t merge_limit(const ClusteringInstance& instance, Budget tau) {
  return static_cast<std::size_t>(std::min<Budget>(tau, instance.n - 1));
}

}  // namespace

CappedRunOutcome outcome_of_forest(const MergeForest& forest, const ClusteringInstance& instance,
                                   Budget tau) {
  const std::size_t limit = merge_limit(instance, tau);
  for (std::size_t used = 0; used <= limit; ++used) {
    const Pruning p = best_pruning(forest.prefix(used), instance.k, instance);
    if (p.cost <= instance.theta + kMetricTolerance) return CappedRunOutcome::solved_at(used);
  }
  return CappedRunOutcome::exceeded(tau);
}

CappedRunOutcome clustering_run_with_cap(double rho, const ClusteringInstance& instance,
                                         Budget tau) {
  const MergeForest forest = capped_linkage_run(instance, rho, merge_limit(instance, tau));
  return outcome_of_forest(forest, instance, tau);
}

std::vector<TrackedCell<MergeForest>> linkage_cells(const ClusteringInstance& instance,
                                                    Budget tau) {
  const std::size_t limit = merge_limit(instance, tau);
  return track_cells<MergeForest>(
      0.0, 1.0, [&](RhoProbe& probe) { return linkage_execute(instance, probe, limit); },
      kDegenerateLinkage);
}

OutcomeCells clustering_instance_cells(const ClusteringInstance& instance, Budget tau) {
  OutcomeCells cells;
  for (auto& c : linkage_cells(instance, tau)) {
    cells.push_back({c.interval, outcome_of_forest(c.result, instance, tau)});
  }
  return cells;
}

std::vector<PartitionCell> clustering_partition(std::span<const ClusteringInstance> instances,
                                                Budget tau) {
  if (instances.empty()) {
    PartitionCell whole;
    whole.cell.intervals.push_back(Interval{0.0, 1.0, true});
    whole.cell.label = "cell-0";
    return {whole};
  }
  std::vector<OutcomeCells> cells;
  for (const auto& instance : instances) cells.push_back(clustering_instance_cells(instance, tau));
  std::vector<const OutcomeCells*> parts;
  std::vector<std::size_t> instance_of;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    parts.push_back(&cells[i]);
    instance_of.push_back(i);
  }
  return refine_partitions(parts, instance_of, 0.0, 1.0);
}

}  // namespace frugal::clustering
