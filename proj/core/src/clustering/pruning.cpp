#include "frugal/clustering/pruning.hpp"

#include <algorithm>
#include <stdexcept>

namespace frugal::clustering {

namespace {

constexpr double kInf = kInadmissibleCost;

struct NodeTable {
  // cost[q] for q in [0, size]; cost[0] is unused.
  std::vector<double> cost;
  // For internal nodes and q >= 2, clusters taken from the left child.
  std::vector<std::size_t> left_q;
};

void collect(const MergeForest& forest, const std::vector<NodeTable>& table, std::size_t node,
             std::size_t q, std::vector<std::size_t>& out) {
  if (q == 1) {
    out.push_back(node);
    return;
  }
  const Merge& m = forest.merge_of(node);
  const std::size_t ql = table[node].left_q[q];
  collect(forest, table, m.left, ql, out);
  collect(forest, table, m.right, q - ql, out);
}

}  // namespace

Pruning best_pruning(const MergeForest& forest, std::size_t k, const ClusteringInstance& instance) {
  if (k < 1 || k > forest.n) throw std::invalid_argument("best_pruning: k must lie in [1, n]");
  Pruning result;
  if (k < forest.roots.size()) return result;

  std::vector<NodeTable> table(forest.members.size());
  for (std::size_t node = 0; node < forest.members.size(); ++node) {
    const auto& members = forest.members[node];
    NodeTable& t = table[node];
    t.cost.assign(members.size() + 1, kInf);
    t.left_q.assign(members.size() + 1, 0);
    t.cost[1] = cluster_cost(instance, members);
    if (forest.is_leaf(node)) continue;
    const Merge& m = forest.merge_of(node);
    const NodeTable& l = table[m.left];
    const NodeTable& r = table[m.right];
    for (std::size_t q = 2; q <= members.size(); ++q) {
      for (std::size_t ql = 1; ql < q && ql < l.cost.size(); ++ql) {
        const std::size_t qr = q - ql;
        if (qr >= r.cost.size()) continue;
        const double c = l.cost[ql] + r.cost[qr];
        if (c < t.cost[q]) {
          t.cost[q] = c;
          t.left_q[q] = ql;
        }
      }
    }
  }

  // Knapsack over roots: best[i][q] covers the first i roots with q clusters.
  const auto& roots = forest.roots;
  std::vector<std::vector<double>> best(roots.size() + 1, std::vector<double>(k + 1, kInf));
  std::vector<std::vector<std::size_t>> take(roots.size() + 1, std::vector<std::size_t>(k + 1, 0));
  best[0][0] = 0.0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const NodeTable& t = table[roots[i]];
    for (std::size_t q = 0; q <= k; ++q) {
      if (best[i][q] == kInf) continue;
      for (std::size_t g = 1; g < t.cost.size() && q + g <= k; ++g) {
        const double c = best[i][q] + t.cost[g];
        if (c < best[i + 1][q + g]) {
          best[i + 1][q + g] = c;
          take[i + 1][q + g] = g;
        }
      }
    }
  }
  if (best[roots.size()][k] == kInf) return result;

  result.cost = best[roots.size()][k];
  std::size_t q = k;
  for (std::size_t i = roots.size(); i > 0; --i) {
    const std::size_t g = take[i][q];
    collect(forest, table, roots[i - 1], g, result.clusters);
    q -= g;
  }
  std::sort(result.clusters.begin(), result.clusters.end());
  result.assignment.assign(forest.n, 0);
  for (std::size_t c = 0; c < result.clusters.size(); ++c) {
    for (std::size_t p : forest.members[result.clusters[c]]) result.assignment[p] = c;
  }
  return result;
}

}  // namespace frugal::clustering
