#include "frugal/core/rho_probe.hpp"

#include <algorithm>
#include <stdexcept>

namespace frugal {

bool RhoProbe::beats(const AffineScore& a, std::size_t i, const AffineScore& b, std::size_t j,
                     double rho, double upper) noexcept {
  // h(rho) = d0 + rho * (d1 - d0) is the advantage of a over b.
  const double d0 = a.at_zero - b.at_zero;
  const double d1 = a.at_one - b.at_one;
  if (d0 == d1) {
    if (d0 != 0.0) return d0 > 0.0;
    return i < j;
  }
  const double slope = d1 - d0;
  const double crossing = d0 / (d0 - d1);
  if (rho < crossing) return slope < 0.0;
  if (rho > crossing) return slope > 0.0;
  return rho < upper ? slope > 0.0 : slope < 0.0;
}

std::size_t RhoProbe::argmax(std::span<const AffineScore> scores) {
  if (scores.empty()) throw std::invalid_argument("argmax over an empty score set");
  std::size_t best = 0;
  for (std::size_t j = 1; j < scores.size(); ++j) {
    if (beats(scores[j], j, scores[best], best, rho_, upper_)) best = j;
  }
  if (!tracking_) return best;

  const AffineScore& w = scores[best];
  for (std::size_t j = 0; j < scores.size(); ++j) {
    if (j == best) continue;
    if (!beats(w, best, scores[j], j, rho_, upper_)) {
      throw DegenerateTieError("non-transitive score comparison");
    }
    const double d0 = w.at_zero - scores[j].at_zero;
    const double d1 = w.at_one - scores[j].at_one;
    if (d0 == d1 || d1 - d0 >= 0.0) continue;
    // The advantage shrinks; the rival takes over at the crossing.
    const double crossing = d0 / (d0 - d1);
    if (crossing < upper_) right_ = std::min(right_, crossing);
  }
  return best;
}

}  // namespace frugal
