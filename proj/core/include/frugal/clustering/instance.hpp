#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "frugal/core/types.hpp"

namespace frugal::clustering {

inline constexpr std::size_t kMaxPoints = 12;
inline constexpr double kMetricTolerance = 1e-9;

/// Points given by a distance matrix, a target cluster count k and the
/// k-median cost threshold theta below which a clustering is admissible.
struct ClusteringInstance {
  std::size_t n = 0;
  std::size_t k = 1;
  double theta = 0.0;
  std::vector<std::vector<double>> dist;

  double d(std::size_t u, std::size_t v) const { return dist[u][v]; }

  /// Throws std::invalid_argument unless 1 <= n <= kMaxPoints, 1 <= k <= n,
  /// theta > 0 and dist is a finite metric (symmetric, zero diagonal,
  /// non-negative, triangle inequality up to kMetricTolerance).
  void validate() const;
};

/// Text format: `n k theta`, then the full n x n distance matrix row by row.
ClusteringInstance parse_clustering(std::istream& in);
ClusteringInstance parse_clustering(const std::string& text);
ClusteringInstance read_clustering(const std::filesystem::path& path);
std::string write_clustering(const ClusteringInstance& instance);

/// k-median cost of one cluster with its center chosen among its members.
double cluster_cost(const ClusteringInstance& instance, std::span<const std::size_t> members);

/// Optimal k-median cost over all center sets of size k drawn from the points,
/// each point paying the distance to its nearest center. Exhaustive.
double optimal_k_median(const std::vector<std::vector<double>>& dist, std::size_t k);

/// Integer points in [0, 20]^2 under the L1 metric, with theta set to
/// slack * optimal_k_median.
ClusteringInstance random_metric(Rng& rng, std::size_t n, std::size_t k, double slack = 1.2);

}  // namespace frugal::clustering
