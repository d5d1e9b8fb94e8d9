#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "frugal/core/problem.hpp"
#include "frugal/core/tracking.hpp"

namespace frugal {

/// Configuration problem over a finite corpus of deterministic instances,
/// with the instance distribution taken as uniform-with-replacement over the
/// corpus. Subclasses provide the per-instance loss oracle and the
/// per-instance exact partition of [lower, upper]; this class caches those
/// partitions and forms common refinements.
class CorpusProblem : public ConfigProblem {
 public:
  CorpusProblem(Domain domain, std::size_t corpus_size, unsigned threads);

  const ParamSpace& space() const override { return space_; }
  std::size_t corpus_size() const noexcept { return corpus_size_; }
  unsigned threads() const noexcept { return threads_; }

  InstanceHandle sample(Rng& rng) override;
  /// Fresh handle for a specific corpus member.
  InstanceHandle handle(std::size_t index);

  CappedRunOutcome run_with_cap(const ParamPoint& rho, const InstanceHandle& instance,
                                Budget tau) const override;
  std::vector<PartitionCell> get_partition(std::span<const InstanceHandle> instances,
                                           Budget tau) const override;
  /// Measured size of the common refinement for the distinct corpus members
  /// in `instances`.
  std::uint64_t f_bound(std::span<const InstanceHandle> instances, Budget tau) const override;
  std::unique_ptr<FBoundTracker> f_tracker(Budget tau) const override;

  /// Cached exact partition of the parameter interval for one corpus member.
  std::shared_ptr<const OutcomeCells> instance_cells(std::size_t index, Budget tau) const;

 protected:
  virtual CappedRunOutcome run_index(std::size_t index, double rho, Budget tau) const = 0;
  virtual OutcomeCells track_index(std::size_t index, Budget tau) const = 0;

  std::size_t index_of(const InstanceHandle& instance) const;

 private:
  void warm(const std::vector<std::size_t>& indices, Budget tau) const;

  Domain domain_;
  std::size_t corpus_size_;
  unsigned threads_;
  ParamSpace space_{1};
  std::uint64_t next_id_ = 0;

  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<std::size_t, Budget>, std::shared_ptr<const OutcomeCells>> cache_;
};

}  // namespace frugal
