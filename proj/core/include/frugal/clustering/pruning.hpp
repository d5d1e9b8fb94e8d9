#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "frugal/clustering/instance.hpp"
#include "frugal/clustering/linkage.hpp"

namespace frugal::clustering {

/// Cost reported when no pruning with exactly k clusters exists.
inline constexpr double kInadmissibleCost = std::numeric_limits<double>::infinity();

struct Pruning {
  /// Selected forest nodes, ascending.
  std::vector<std::size_t> clusters;
  /// assignment[p] indexes `clusters`.
  std::vector<std::size_t> assignment;
  double cost = kInadmissibleCost;

  bool admissible() const noexcept { return cost != kInadmissibleCost; }
};

/// Cheapest antichain of exactly k forest nodes covering every point, under
/// the k-median objective with each cluster's center chosen among its
/// members. Tree DP per root, knapsack across roots. Throws
/// std::invalid_argument unless 1 <= k <= n; returns an inadmissible pruning
/// when k is smaller than the number of roots.
Pruning best_pruning(const MergeForest& forest, std::size_t k, const ClusteringInstance& instance);

}  // namespace frugal::clustering
