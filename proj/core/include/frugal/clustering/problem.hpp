#pragma once

#include <vector>

#include "frugal/clustering/instance.hpp"
#include "frugal/core/corpus.hpp"

namespace frugal::clustering {

/// Tuning the rho-linkage mixture over a fixed corpus of clustering
/// instances. Budgets count merges.
class ClusteringProblem final : public CorpusProblem {
 public:
  explicit ClusteringProblem(std::vector<ClusteringInstance> corpus, unsigned threads = 1);

  std::string name() const override { return "clustering"; }
  const ClusteringInstance& instance(std::size_t index) const { return corpus_.at(index); }

 protected:
  CappedRunOutcome run_index(std::size_t index, double rho, Budget tau) const override;
  OutcomeCells track_index(std::size_t index, Budget tau) const override;

 private:
  std::vector<ClusteringInstance> corpus_;
};

}  // namespace frugal::clustering
