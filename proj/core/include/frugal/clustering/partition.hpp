#pragma once

#include <span>
#include <vector>

#include "frugal/clustering/linkage.hpp"
#include "frugal/core/tracking.hpp"

namespace frugal::clustering {

inline constexpr const char* kDegenerateLinkage = "degenerate linkage tie";

/// Smallest merge budget tau' <= tau at which the best k-pruning of the
/// tau'-merge forest costs at most theta. Budgets beyond n - 1 add no merges.
CappedRunOutcome clustering_run_with_cap(double rho, const ClusteringInstance& instance,
                                         Budget tau);

/// Same decision made on an already built forest holding at least
/// min(tau, n - 1) merges.
CappedRunOutcome outcome_of_forest(const MergeForest& forest, const ClusteringInstance& instance,
                                   Budget tau);

/// Intervals of [0,1] on which the first min(tau, n - 1) merges are identical.
std::vector<TrackedCell<MergeForest>> linkage_cells(const ClusteringInstance& instance, Budget tau);

OutcomeCells clustering_instance_cells(const ClusteringInstance& instance, Budget tau);

std::vector<PartitionCell> clustering_partition(std::span<const ClusteringInstance> instances,
                                                Budget tau);

}  // namespace frugal::clustering
