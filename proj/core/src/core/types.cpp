#include "frugal/core/types.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace frugal {

ParamSpace::ParamSpace(std::size_t dimension) : bounds_(dimension, Bounds{}) {
  if (dimension == 0) {
    throw std::invalid_argument("parameter space dimension must be at least 1");
  }
}

ParamSpace::ParamSpace(std::vector<Bounds> bounds) : bounds_(std::move(bounds)) {
  if (bounds_.empty()) {
    throw std::invalid_argument("parameter space dimension must be at least 1");
  }
  for (const auto& b : bounds_) {
    if (!(b.lower <= b.upper)) {
      throw std::invalid_argument("parameter bound has lower > upper");
    }
  }
}

bool ParamSpace::contains(const ParamPoint& point) const {
  if (point.dimension() != dimension()) return false;
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    const double x = point.coords[i];
    if (!(x >= bounds_[i].lower && x <= bounds_[i].upper)) return false;
  }
  return true;
}

void ParamSpace::require(const ParamPoint& point) const {
  if (!contains(point)) {
    std::ostringstream os;
    os << "parameter point outside the space (dimension " << point.dimension() << " vs "
       << dimension() << ")";
    throw std::invalid_argument(os.str());
  }
}

bool ParamCell::contains(double rho) const noexcept {
  return std::any_of(intervals.begin(), intervals.end(),
                     [rho](const Interval& iv) { return iv.contains(rho); });
}

double ParamCell::measure() const noexcept {
  double total = 0.0;
  for (const auto& iv : intervals) total += iv.width();
  return total;
}

double ParamCell::representative() const {
  if (intervals.empty()) throw std::logic_error("empty parameter cell has no representative");
  return intervals.front().midpoint();
}

void ParamCell::validate() const {
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const auto& iv = intervals[i];
    if (!(iv.lo < iv.hi) && !(iv.closed_hi && iv.lo == iv.hi)) {
      throw std::invalid_argument("parameter cell contains an empty interval");
    }
    if (i > 0 && intervals[i - 1].hi > iv.lo) {
      throw std::invalid_argument("parameter cell intervals overlap or are unsorted");
    }
  }
}

std::string check_partition(const std::vector<PartitionCell>& cells, const ParamSpace& space,
                            Budget tau, std::size_t instance_count) {
  std::ostringstream err;
  if (cells.empty()) return "partition is empty";

  std::vector<Interval> all;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto& pc = cells[c];
    try {
      pc.cell.validate();
    } catch (const std::exception& e) {
      err << "cell " << c << ": " << e.what();
      return err.str();
    }
    if (pc.capped_losses.size() != instance_count) {
      err << "cell " << c << " has " << pc.capped_losses.size() << " losses for " << instance_count
          << " instances";
      return err.str();
    }
    std::size_t below = 0;
    std::size_t at_most = 0;
    for (Budget loss : pc.capped_losses) {
      if (loss > tau) {
        err << "cell " << c << " has capped loss " << loss << " above cap " << tau;
        return err.str();
      }
      below += loss < tau;
      at_most += 1;
    }
    const double n = static_cast<double>(instance_count);
    if (instance_count > 0) {
      const double lo = static_cast<double>(below) / n;
      const double hi = static_cast<double>(at_most) / n;
      if (pc.z < lo - 1e-12 || pc.z > hi + 1e-12) {
        err << "cell " << c << " has z=" << pc.z << " outside [" << lo << ", " << hi << "]";
        return err.str();
      }
    }
    all.insert(all.end(), pc.cell.intervals.begin(), pc.cell.intervals.end());
  }

  std::sort(all.begin(), all.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  const Bounds& b = space.bounds(0);
  if (all.front().lo != b.lower) {
    err << "partition starts at " << all.front().lo << " instead of " << b.lower;
    return err.str();
  }
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (all[i - 1].closed_hi || all[i - 1].hi != all[i].lo) {
      err << "gap or overlap between " << all[i - 1].hi << " and " << all[i].lo;
      return err.str();
    }
  }
  if (all.back().hi != b.upper || !all.back().closed_hi) {
    err << "partition does not end closed at " << b.upper;
    return err.str();
  }
  return {};
}

std::string to_string(Domain domain) {
  switch (domain) {
    case Domain::custom: return "custom";
    case Domain::synthetic: return "synthetic";
    case Domain::bnb: return "bnb";
    case Domain::clustering: return "clustering";
  }
  return "unknown";
}

}  // namespace frugal
