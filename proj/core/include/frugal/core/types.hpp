#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace frugal {

/// Integer resource budget (tree nodes, merges, abstract loss units).
using Budget = std::uint64_t;

/// Engine used for every random draw in the library. Seeded explicitly so runs
/// are reproducible bit-for-bit.
using Rng = std::mt19937_64;

/// Uniform draw from [0, n) by rejection on raw engine output, so the stream
/// is identical across standard libraries. Requires n > 0.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = Rng::max() - (Rng::max() % n + 1) % n;
  std::uint64_t draw = rng();
  while (draw > limit) draw = rng();
  return draw % n;
}

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

struct Bounds {
  double lower = 0.0;
  double upper = 1.0;
};

struct ParamPoint {
  std::vector<double> coords;

  static ParamPoint scalar(double rho) { return ParamPoint{{rho}}; }

  std::size_t dimension() const noexcept { return coords.size(); }
  /// First coordinate; every shipped domain is one-dimensional.
  double rho() const { return coords.at(0); }

  friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
};

/// Axis-aligned box of admissible parameters. Defaults to [0,1]^d.
class ParamSpace {
 public:
  explicit ParamSpace(std::size_t dimension = 1);
  explicit ParamSpace(std::vector<Bounds> bounds);

  std::size_t dimension() const noexcept { return bounds_.size(); }
  const Bounds& bounds(std::size_t axis = 0) const { return bounds_.at(axis); }
  bool contains(const ParamPoint& point) const;

  /// Throws std::invalid_argument when `point` has the wrong dimension or
  /// lies outside the box.
  void require(const ParamPoint& point) const;

 private:
  std::vector<Bounds> bounds_;
};

/// Half-open interval [lo, hi); closed at hi when it touches the space's
/// upper bound.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool closed_hi = false;

  bool contains(double x) const noexcept { return x >= lo && (x < hi || (closed_hi && x == hi)); }
  double width() const noexcept { return hi - lo; }
  double midpoint() const noexcept { return lo + 0.5 * (hi - lo); }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Region of a one-dimensional parameter space: sorted, disjoint, nonempty
/// intervals.
struct ParamCell {
  std::vector<Interval> intervals;
  std::string label;

  bool contains(double rho) const noexcept;
  double measure() const noexcept;
  /// Midpoint of the first interval.
  double representative() const;
  /// Throws std::invalid_argument if the intervals are unsorted, overlap or
  /// are empty.
  void validate() const;
};

/// Result of running a configured algorithm under a budget. When unsolved,
/// `budget_used` equals the cap, meaning the true loss exceeds it.
struct CappedRunOutcome {
  Budget budget_used = 0;
  bool solved = false;

  static CappedRunOutcome solved_at(Budget loss) { return {loss, true}; }
  static CappedRunOutcome exceeded(Budget cap) { return {cap, false}; }

  /// min{loss, cap}.
  Budget capped_loss() const noexcept { return budget_used; }

  friend bool operator==(const CappedRunOutcome&, const CappedRunOutcome&) = default;
};

enum class Domain : std::uint8_t { custom, synthetic, bnb, clustering };

/// A frozen problem instance. `payload` is interpreted by the owning domain
/// (coin bits, corpus index, ...); equal handles always have equal losses.
struct InstanceHandle {
  Domain domain = Domain::custom;
  std::uint64_t id = 0;
  std::uint64_t payload = 0;

  friend bool operator==(const InstanceHandle&, const InstanceHandle&) = default;
};

/// One region of a partition together with the fraction of instances solved
/// under the cap and every instance's capped loss. `capped_losses[i]` belongs
/// to the i-th instance of the list the partition was computed for.
struct PartitionCell {
  ParamCell cell;
  double z = 0.0;
  std::vector<Budget> capped_losses;
};

/// Checks that `cells` cover the space's first axis without overlap and that
/// every cell satisfies the cap/z invariants. Returns an empty string when the
/// partition is sound, otherwise a description of the first violation.
std::string check_partition(const std::vector<PartitionCell>& cells, const ParamSpace& space,
                            Budget tau, std::size_t instance_count);

std::string to_string(Domain domain);

}  // namespace frugal
