#include "frugal/clustering/problem.hpp"

#include "frugal/clustering/partition.hpp"

namespace frugal::clustering {

ClusteringProblem::ClusteringProblem(std::vector<ClusteringInstance> corpus, unsigned threads)
    : CorpusProblem(Domain::clustering, corpus.size(), threads), corpus_(std::move(corpus)) {
  for (const auto& inst : corpus_) inst.validate();
}

CappedRunOutcome ClusteringProblem::run_index(std::size_t index, double rho, Budget tau) const {
  return clustering_run_with_cap(rho, corpus_[index], tau);
}

OutcomeCells ClusteringProblem::track_index(std::size_t index, Budget tau) const {
  return clustering_instance_cells(corpus_[index], tau);
}

}  // namespace frugal::clustering
