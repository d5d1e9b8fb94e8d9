#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>

namespace frugal {

/// Raised when near-coincident breakpoints make rho decisions ill-defined.
class DegenerateTieError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Score that is affine in a scalar parameter rho:
/// value(rho) = (1 - rho) * at_zero + rho * at_one.
struct AffineScore {
  double at_zero = 0.0;
  double at_one = 0.0;

  double value(double rho) const noexcept { return (1.0 - rho) * at_zero + rho * at_one; }
};

/// Makes every rho-dependent argmax decision of an algorithm run.
///
/// In point mode the probe answers at a fixed rho. In tracking mode it answers
/// at the left end `lo` of a working interval and shrinks the interval's right
/// end so that every rho in [lo, right) (or [lo, upper] when the right end
/// reaches the upper bound) would have made the same decisions.
///
/// Pairwise comparisons go through the crossing point of the two lines, so a
/// point run and a tracking run agree exactly on which side of a breakpoint a
/// rho falls. Exact ties resolve towards the line that wins immediately to the
/// right of rho (to the left at the upper bound); identical lines resolve to
/// the lower index. The induced behaviour is right-continuous, which is what
/// makes half-open cells exact.
class RhoProbe {
 public:
  static RhoProbe at(double rho, double upper = 1.0) { return RhoProbe(rho, upper, false); }
  static RhoProbe tracking(double lo, double upper = 1.0) { return RhoProbe(lo, upper, true); }

  double rho() const noexcept { return rho_; }
  double upper() const noexcept { return upper_; }
  bool is_tracking() const noexcept { return tracking_; }
  /// Right end of the invariance interval; equals upper() until narrowed.
  double right() const noexcept { return right_; }

  /// Index of the maximum score at rho(). Throws DegenerateTieError if the
  /// comparisons are not transitive at rho (pathological near-ties).
  std::size_t argmax(std::span<const AffineScore> scores);

  /// True when candidate i beats candidate j at `rho`.
  static bool beats(const AffineScore& a, std::size_t i, const AffineScore& b, std::size_t j,
                    double rho, double upper) noexcept;

 private:
  RhoProbe(double rho, double upper, bool tracking)
      : rho_(rho), upper_(upper), right_(upper), tracking_(tracking) {}

  double rho_;
  double upper_;
  double right_;
  bool tracking_;
};

}  // namespace frugal
