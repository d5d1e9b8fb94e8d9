#include "frugal/core/problem.hpp"

namespace frugal {

namespace {

class RecomputingTracker final : public FBoundTracker {
 public:
  RecomputingTracker(const ConfigProblem& problem, Budget tau) : problem_(problem), tau_(tau) {}

  std::uint64_t add(const InstanceHandle& instance) override {
    instances_.push_back(instance);
    return problem_.f_bound(instances_, tau_);
  }

 private:
  const ConfigProblem& problem_;
  Budget tau_;
  std::vector<InstanceHandle> instances_;
};

}  // namespace

std::unique_ptr<FBoundTracker> ConfigProblem::f_tracker(Budget tau) const {
  return std::make_unique<RecomputingTracker>(*this, tau);
}

}  // namespace frugal
