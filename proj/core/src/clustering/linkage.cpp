#include "frugal/clustering/linkage.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace frugal::clustering {

double linkage_merge_value(std::span<const std::size_t> A, std::span<const std::size_t> B,
                           double rho, const ClusteringInstance& instance) {
  if (A.empty() || B.empty()) throw std::invalid_argument("linkage of an empty set");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t u : A) {
    for (std::size_t v : B) {
      if (u == v) throw std::invalid_argument("linkage of overlapping sets");
      lo = std::min(lo, instance.d(u, v));
      hi = std::max(hi, instance.d(u, v));
    }
  }
  return rho * lo + (1.0 - rho) * hi;
}

MergeForest MergeForest::singletons(std::size_t n) {
  MergeForest forest;
  forest.n = n;
  for (std::size_t p = 0; p < n; ++p) {
    forest.roots.push_back(p);
    forest.members.push_back({p});
  }
  return forest;
}

void MergeForest::merge(std::size_t a, std::size_t b) {
  const auto ia = std::find(roots.begin(), roots.end(), a);
  const auto ib = std::find(roots.begin(), roots.end(), b);
  if (a == b || ia == roots.end() || ib == roots.end()) {
    throw std::invalid_argument("merge of non-root or identical nodes");
  }
  const std::size_t id = members.size();
  std::vector<std::size_t> joined;
  std::merge(members[a].begin(), members[a].end(), members[b].begin(), members[b].end(),
             std::back_inserter(joined));
  members.push_back(std::move(joined));
  merges.push_back(Merge{std::min(a, b), std::max(a, b), id});
  std::erase_if(roots, [&](std::size_t r) { return r == a || r == b; });
  roots.push_back(id);
}

MergeForest MergeForest::prefix(std::size_t count) const {
  if (count > merges.size()) throw std::invalid_argument("prefix longer than the merge history");
  MergeForest forest = singletons(n);
  for (std::size_t i = 0; i < count; ++i) forest.merge(merges[i].left, merges[i].right);
  return forest;
}

MergeForest linkage_execute(const ClusteringInstance& instance, RhoProbe& probe,
                            std::size_t tau_merges) {
  const std::size_t n = instance.n;
  if (tau_merges + 1 > n) throw std::invalid_argument("merge budget exceeds n - 1");
  MergeForest forest = MergeForest::singletons(n);

  // Pairwise min / max distance between nodes, maintained through merges.
  const std::size_t total = 2 * n;
  std::vector<double> lo(total * total, 0.0);
  std::vector<double> hi(total * total, 0.0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) lo[u * total + v] = hi[u * total + v] = instance.d(u, v);
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<AffineScore> lines;
  for (std::size_t step = 0; step < tau_merges; ++step) {
    pairs.clear();
    lines.clear();
    for (std::size_t i = 0; i < forest.roots.size(); ++i) {
      for (std::size_t j = i + 1; j < forest.roots.size(); ++j) {
        pairs.emplace_back(forest.roots[i], forest.roots[j]);
      }
    }
    // The roots are kept ascending except for the newest id, which is the
    // largest anyway, so this is already lexicographic.
    for (const auto& [a, b] : pairs) {
      // Smallest linkage value wins, so maximize its negation.
      lines.push_back(AffineScore{-hi[a * total + b], -lo[a * total + b]});
    }
    const auto [a, b] = pairs[probe.argmax(lines)];
    const std::size_t id = forest.members.size();
    for (std::size_t r : forest.roots) {
      if (r == a || r == b) continue;
      lo[id * total + r] = lo[r * total + id] = std::min(lo[a * total + r], lo[b * total + r]);
      hi[id * total + r] = hi[r * total + id] = std::max(hi[a * total + r], hi[b * total + r]);
    }
    forest.merge(a, b);
  }
  return forest;
}

MergeForest capped_linkage_run(const ClusteringInstance& instance, double rho,
                               std::size_t tau_merges) {
  RhoProbe probe = RhoProbe::at(rho);
  return linkage_execute(instance, probe, tau_merges);
}

}  // namespace frugal::clustering
