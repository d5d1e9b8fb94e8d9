#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "frugal/core/types.hpp"

namespace frugal {

class ConfigProblem;

/// Running value of f over a growing instance set. `add` returns
/// f(instances added so far, tau).
class FBoundTracker {
 public:
  virtual ~FBoundTracker() = default;
  virtual std::uint64_t add(const InstanceHandle& instance) = 0;
};

/// Contract every configuration domain implements: an instance sampler, a
/// capped loss oracle, and an exact partition of the parameter space into
/// regions of constant capped loss.
///
/// `run_with_cap`, `get_partition` and `f_bound` must be safe to call
/// concurrently on frozen instances. `sample` mutates the id counter and is
/// only called from the learner's thread.
class ConfigProblem {
 public:
  virtual ~ConfigProblem() = default;

  virtual std::string name() const = 0;
  virtual const ParamSpace& space() const = 0;

  virtual InstanceHandle sample(Rng& rng) = 0;

  /// solved is non-decreasing in tau; when solved, budget_used is the exact
  /// loss and does not depend on tau.
  virtual CappedRunOutcome run_with_cap(const ParamPoint& rho, const InstanceHandle& instance,
                                        Budget tau) const = 0;

  virtual std::vector<PartitionCell> get_partition(std::span<const InstanceHandle> instances,
                                                   Budget tau) const = 0;

  /// Upper bound on the partition size; monotone in both arguments.
  virtual std::uint64_t f_bound(std::span<const InstanceHandle> instances, Budget tau) const = 0;

  /// Incremental view of f_bound for a growing sample. The default
  /// implementation recomputes f_bound over the accumulated set on every add.
  virtual std::unique_ptr<FBoundTracker> f_tracker(Budget tau) const;
};

}  // namespace frugal
