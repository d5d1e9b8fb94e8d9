#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "frugal/clustering/instance.hpp"
#include "frugal/core/rho_probe.hpp"

namespace frugal::clustering {

/// rho * min_{u in A, v in B} d(u,v) + (1 - rho) * max_{u in A, v in B} d(u,v).
/// Throws std::invalid_argument if A or B is empty or they intersect.
double linkage_merge_value(std::span<const std::size_t> A, std::span<const std::size_t> B,
                           double rho, const ClusteringInstance& instance);

struct Merge {
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t result = 0;

  friend bool operator==(const Merge&, const Merge&) = default;
};

/// Partial agglomerative hierarchy. Nodes 0..n-1 are the points; the i-th
/// merge creates node n + i.
struct MergeForest {
  std::size_t n = 0;
  std::vector<Merge> merges;
  /// Current roots in ascending id order.
  std::vector<std::size_t> roots;
  /// Sorted point ids under each node.
  std::vector<std::vector<std::size_t>> members;

  static MergeForest singletons(std::size_t n);
  /// Applies one merge of two current roots.
  void merge(std::size_t a, std::size_t b);
  /// The forest after only the first `count` merges.
  MergeForest prefix(std::size_t count) const;
  bool is_leaf(std::size_t node) const noexcept { return node < n; }
  /// Children of an internal node.
  const Merge& merge_of(std::size_t node) const { return merges.at(node - n); }
};

/// Performs `tau_merges` greedy merges of the root pair with the smallest
/// linkage value, with every comparison made through `probe`. Candidate pairs
/// are scanned in lexicographic (smaller id, larger id) order, so exact ties
/// go to the first pair.
MergeForest linkage_execute(const ClusteringInstance& instance, RhoProbe& probe,
                            std::size_t tau_merges);

/// Throws std::invalid_argument unless tau_merges <= n - 1.
MergeForest capped_linkage_run(const ClusteringInstance& instance, double rho,
                               std::size_t tau_merges);

}  // namespace frugal::clustering
