#pragma once

#include <memory>
#include <vector>

#include "frugal/bnb/lp.hpp"
#include "frugal/core/corpus.hpp"

namespace frugal::bnb {

enum class FBoundMode : std::uint8_t {
  /// Cell count of the actual common refinement.
  measured,
  /// |S| * n^(2(tau+1)) + 1.
  analytic,
};

/// Tuning the branching mixture over a fixed corpus of MILPs.
class BnbProblem final : public CorpusProblem {
 public:
  BnbProblem(std::vector<Milp> corpus, unsigned threads = 1,
             FBoundMode mode = FBoundMode::measured);

  std::string name() const override { return "bnb"; }
  const LpOracle& oracle(std::size_t index) const { return *oracles_.at(index); }
  FBoundMode f_mode() const noexcept { return mode_; }

  std::uint64_t f_bound(std::span<const InstanceHandle> instances, Budget tau) const override;
  std::unique_ptr<FBoundTracker> f_tracker(Budget tau) const override;

 protected:
  CappedRunOutcome run_index(std::size_t index, double rho, Budget tau) const override;
  OutcomeCells track_index(std::size_t index, Budget tau) const override;

 private:
  std::vector<std::unique_ptr<LpOracle>> oracles_;
  std::size_t max_n_ = 0;
  FBoundMode mode_;
};

}  // namespace frugal::bnb
