#include "frugal/bnb/problem.hpp"

#include <algorithm>

#include "frugal/bnb/partition.hpp"

namespace frugal::bnb {

namespace {

class AnalyticTracker final : public FBoundTracker {
 public:
  AnalyticTracker(std::size_t n, Budget tau) : n_(n), tau_(tau) {}

  std::uint64_t add(const InstanceHandle&) override {
    return f_bound_bnb_analytic(++count_, n_, tau_);
  }

 private:
  std::size_t n_;
  Budget tau_;
  std::size_t count_ = 0;
};

}  // namespace

BnbProblem::BnbProblem(std::vector<Milp> corpus, unsigned threads, FBoundMode mode)
    : CorpusProblem(Domain::bnb, corpus.size(), threads), mode_(mode) {
  oracles_.reserve(corpus.size());
  for (auto& milp : corpus) {
    max_n_ = std::max(max_n_, milp.n);
    oracles_.push_back(std::make_unique<LpOracle>(std::move(milp)));
  }
}

CappedRunOutcome BnbProblem::run_index(std::size_t index, double rho, Budget tau) const {
  return bnb_run(*oracles_[index], rho, tau);
}

OutcomeCells BnbProblem::track_index(std::size_t index, Budget tau) const {
  return bnb_instance_cells(*oracles_[index], tau);
}

std::uint64_t BnbProblem::f_bound(std::span<const InstanceHandle> instances, Budget tau) const {
  if (mode_ == FBoundMode::analytic) return f_bound_bnb_analytic(instances.size(), max_n_, tau);
  return CorpusProblem::f_bound(instances, tau);
}

std::unique_ptr<FBoundTracker> BnbProblem::f_tracker(Budget tau) const {
  if (mode_ == FBoundMode::analytic) return std::make_unique<AnalyticTracker>(max_n_, tau);
  return CorpusProblem::f_tracker(tau);
}

}  // namespace frugal::bnb
