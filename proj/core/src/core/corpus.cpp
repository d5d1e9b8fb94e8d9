#include "frugal/core/corpus.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "frugal/core/parallel.hpp"

namespace frugal {

namespace {

class CorpusTracker final : public FBoundTracker {
 public:
  CorpusTracker(const CorpusProblem& problem, Budget tau) : problem_(problem), tau_(tau) {}

  std::uint64_t add(const InstanceHandle& instance) override {
    const std::size_t index = instance.payload;
    if (seen_.insert(index).second) {
      const auto cells = problem_.instance_cells(index, tau_);
      for (const auto& c : *cells) {
        if (c.interval.lo != problem_.space().bounds().lower) starts_.insert(c.interval.lo);
      }
    }
    return starts_.size() + 1;
  }

 private:
  const CorpusProblem& problem_;
  Budget tau_;
  std::set<std::size_t> seen_;
  std::set<double> starts_;
};

}  // namespace

CorpusProblem::CorpusProblem(Domain domain, std::size_t corpus_size, unsigned threads)
    : domain_(domain), corpus_size_(corpus_size), threads_(std::max(1u, threads)) {
  if (corpus_size_ == 0) throw std::invalid_argument("instance corpus is empty");
}

InstanceHandle CorpusProblem::sample(Rng& rng) {
  return handle(static_cast<std::size_t>(uniform_index(rng, corpus_size_)));
}

InstanceHandle CorpusProblem::handle(std::size_t index) {
  if (index >= corpus_size_) throw std::out_of_range("corpus index out of range");
  return InstanceHandle{domain_, next_id_++, index};
}

std::size_t CorpusProblem::index_of(const InstanceHandle& instance) const {
  if (instance.domain != domain_ || instance.payload >= corpus_size_) {
    throw std::invalid_argument("instance handle does not belong to this corpus");
  }
  return static_cast<std::size_t>(instance.payload);
}

CappedRunOutcome CorpusProblem::run_with_cap(const ParamPoint& rho, const InstanceHandle& instance,
                                             Budget tau) const {
  space_.require(rho);
  return run_index(index_of(instance), rho.rho(), tau);
}

std::shared_ptr<const OutcomeCells> CorpusProblem::instance_cells(std::size_t index,
                                                                  Budget tau) const {
  {
    std::lock_guard lock(cache_mutex_);
    auto it = cache_.find({index, tau});
    if (it != cache_.end()) return it->second;
  }
  auto cells = std::make_shared<const OutcomeCells>(track_index(index, tau));
  std::lock_guard lock(cache_mutex_);
  return cache_.try_emplace({index, tau}, std::move(cells)).first->second;
}

void CorpusProblem::warm(const std::vector<std::size_t>& indices, Budget tau) const {
  parallel_for(indices.size(), threads_, [&](std::size_t i) { instance_cells(indices[i], tau); });
}

std::vector<PartitionCell> CorpusProblem::get_partition(std::span<const InstanceHandle> instances,
                                                        Budget tau) const {
  std::vector<std::size_t> distinct;
  distinct.reserve(instances.size());
  for (const auto& h : instances) distinct.push_back(index_of(h));
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  warm(distinct, tau);

  std::vector<std::shared_ptr<const OutcomeCells>> owned;
  std::vector<const OutcomeCells*> parts;
  for (std::size_t index : distinct) {
    owned.push_back(instance_cells(index, tau));
    parts.push_back(owned.back().get());
  }
  std::vector<std::size_t> instance_of(instances.size());
  for (std::size_t i = 0; i < instances.size(); ++i) {
    instance_of[i] = static_cast<std::size_t>(
        std::lower_bound(distinct.begin(), distinct.end(), instances[i].payload) - distinct.begin());
  }
  if (instances.empty()) {
    PartitionCell whole;
    whole.cell.intervals.push_back(Interval{space_.bounds().lower, space_.bounds().upper, true});
    whole.cell.label = "cell-0";
    return {whole};
  }
  return refine_partitions(parts, instance_of, space_.bounds().lower, space_.bounds().upper);
}

std::uint64_t CorpusProblem::f_bound(std::span<const InstanceHandle> instances, Budget tau) const {
  std::vector<std::size_t> distinct;
  for (const auto& h : instances) distinct.push_back(index_of(h));
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  warm(distinct, tau);
  CorpusTracker tracker(*this, tau);
  std::uint64_t f = 1;
  for (std::size_t index : distinct) f = tracker.add(InstanceHandle{domain_, 0, index});
  return f;
}

std::unique_ptr<FBoundTracker> CorpusProblem::f_tracker(Budget tau) const {
  return std::make_unique<CorpusTracker>(*this, tau);
}

}  // namespace frugal
