#include "frugal/clustering/instance.hpp"

#include <charconv>
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace frugal::clustering {

namespace {

std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double read_number(std::istream& in, const char* what) {
  std::string token;
  if (!(in >> token)) throw std::invalid_argument(std::string("clustering: missing ") + what);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || !std::isfinite(value)) {
    throw std::invalid_argument("clustering: bad number '" + token + "' in " + what);
  }
  return value;
}

std::size_t read_count(std::istream& in, const char* what) {
  const double v = read_number(in, what);
  if (v < 0 || v != std::floor(v)) {
    throw std::invalid_argument(std::string("clustering: bad ") + what);
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

void ClusteringInstance::validate() const {
  if (n == 0 || n > kMaxPoints) {
    throw std::invalid_argument("clustering: point count must lie in [1, " +
                                std::to_string(kMaxPoints) + "]");
  }
  if (k < 1 || k > n) throw std::invalid_argument("clustering: k must lie in [1, n]");
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw std::invalid_argument("clustering: theta must be positive");
  }
  if (dist.size() != n) throw std::invalid_argument("clustering: matrix row count mismatch");
  for (std::size_t u = 0; u < n; ++u) {
    if (dist[u].size() != n) throw std::invalid_argument("clustering: matrix row length mismatch");
    if (dist[u][u] != 0.0) throw std::invalid_argument("clustering: nonzero diagonal");
    for (std::size_t v = 0; v < n; ++v) {
      if (!std::isfinite(dist[u][v]) || dist[u][v] < 0.0) {
        throw std::invalid_argument("clustering: distances must be finite and non-negative");
      }
      if (dist[u][v] != dist[v][u]) throw std::invalid_argument("clustering: matrix not symmetric");
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t w = 0; w < n; ++w) {
        if (dist[u][w] > dist[u][v] + dist[v][w] + kMetricTolerance) {
          throw std::invalid_argument("clustering: triangle inequality violated at (" +
                                      std::to_string(u) + "," + std::to_string(v) + "," +
                                      std::to_string(w) + ")");
        }
      }
    }
  }
}

ClusteringInstance parse_clustering(std::istream& in) {
  ClusteringInstance inst;
  inst.n = read_count(in, "point count");
  inst.k = read_count(in, "cluster count");
  inst.theta = read_number(in, "theta");
  if (inst.n == 0 || inst.n > kMaxPoints) {
    throw std::invalid_argument("clustering: point count must lie in [1, " +
                                std::to_string(kMaxPoints) + "]");
  }
  inst.dist.assign(inst.n, std::vector<double>(inst.n));
  for (auto& row : inst.dist) {
    for (auto& v : row) v = read_number(in, "distance matrix");
  }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("clustering: trailing content '" + extra + "'");
  inst.validate();
  return inst;
}

ClusteringInstance parse_clustering(const std::string& text) {
  std::istringstream in(text);
  return parse_clustering(in);
}

ClusteringInstance read_clustering(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return parse_clustering(in);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

std::string write_clustering(const ClusteringInstance& instance) {
  std::ostringstream out;
  out << instance.n << ' ' << instance.k << ' ' << shortest(instance.theta) << '\n';
  for (const auto& row : instance.dist) {
    for (std::size_t v = 0; v < row.size(); ++v) out << (v ? " " : "") << shortest(row[v]);
    out << '\n';
  }
  return out.str();
}

double cluster_cost(const ClusteringInstance& instance, std::span<const std::size_t> members) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t center : members) {
    double cost = 0.0;
    for (std::size_t p : members) cost += instance.d(p, center);
    best = std::min(best, cost);
  }
  return best;
}

double optimal_k_median(const std::vector<std::vector<double>>& dist, std::size_t k) {
  const std::size_t n = dist.size();
  if (k < 1 || k > n || n > 20) throw std::invalid_argument("optimal_k_median: bad k or n");
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    double cost = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      double nearest = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < n; ++c) {
        if ((mask >> c) & 1u) nearest = std::min(nearest, dist[p][c]);
      }
      cost += nearest;
    }
    best = std::min(best, cost);
  }
  return best;
}

ClusteringInstance random_metric(Rng& rng, std::size_t n, std::size_t k, double slack) {
  if (n == 0 || n > kMaxPoints || k < 1 || k > n || !(slack >= 1.0)) {
    throw std::invalid_argument("random_metric: bad size, k or slack");
  }
  std::vector<std::pair<int, int>> points(n);
  for (auto& p : points) {
    p.first = static_cast<int>(uniform_index(rng, 21));
    p.second = static_cast<int>(uniform_index(rng, 21));
  }
  ClusteringInstance inst;
  inst.n = n;
  inst.k = k;
  inst.dist.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      inst.dist[u][v] = std::abs(points[u].first - points[v].first) +
                        std::abs(points[u].second - points[v].second);
    }
  }
  const double opt = optimal_k_median(inst.dist, k);
  // All points coinciding would make theta zero; any positive threshold is
  // then admissible.
  inst.theta = opt > 0.0 ? slack * opt : 1.0;
  return inst;
}

}  // namespace frugal::clustering
