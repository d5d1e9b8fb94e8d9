#include <gtest/gtest.h>

#include <cmath>

#include "frugal/core/tail.hpp"
#include "frugal/synthetic/family.hpp"

namespace frugal::synthetic {
namespace {

const SyntheticFamily kFamily{};

TEST(SyntheticFamily, ValidatesRanges) {
  EXPECT_NO_THROW(kFamily.validate());
  EXPECT_THROW((SyntheticFamily{0.3, 0.45}).validate(), std::invalid_argument);
  EXPECT_THROW((SyntheticFamily{0.4, 0.4}).validate(), std::invalid_argument);
  EXPECT_THROW((SyntheticFamily{0.35, 0.45, 8, 16, 16}).validate(), std::invalid_argument);
}

TEST(SyntheticSample, CoinsAreFair) {
  Rng rng(1);
  int low = 0;
  int high = 0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    const auto s = synthetic_sample(rng);
    low += s.low_heavy;
    high += s.high_heavy;
  }
  EXPECT_GE(low / double(draws), 0.49);
  EXPECT_LE(low / double(draws), 0.51);
  EXPECT_GE(high / double(draws), 0.49);
  EXPECT_LE(high / double(draws), 0.51);
}

TEST(SyntheticSample, SeedsGiveDifferentSequences) {
  Rng a(1), b(2);
  int differ = 0;
  for (int i = 0; i < 64; ++i) differ += !(synthetic_sample(a) == synthetic_sample(b));
  EXPECT_GT(differ, 0);
}

TEST(SyntheticProblem, HandlesAreFrozen) {
  SyntheticProblem problem(kFamily);
  Rng rng(3);
  const auto h = problem.sample(rng);
  const auto first = problem.run_with_cap(ParamPoint::scalar(0.2), h, 300);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(problem.run_with_cap(ParamPoint::scalar(0.2), h, 300), first);
}

TEST(SyntheticRun, RegionLosses) {
  const SyntheticInstance heavy{true, true};
  const SyntheticInstance light{false, false};
  const double mid = (kFamily.a + kFamily.b) / 2;
  EXPECT_EQ(synthetic_run_with_cap(kFamily, mid, heavy, 8), CappedRunOutcome::solved_at(8));
  EXPECT_EQ(synthetic_run_with_cap(kFamily, kFamily.a / 2, heavy, 8), CappedRunOutcome::exceeded(8));
  EXPECT_EQ(synthetic_run_with_cap(kFamily, kFamily.a / 2, light, 8), CappedRunOutcome::solved_at(8));
  EXPECT_EQ(synthetic_loss(kFamily, kFamily.a, heavy), 16u);
  EXPECT_EQ(synthetic_loss(kFamily, kFamily.b, heavy), 256u);
  EXPECT_EQ(synthetic_loss(kFamily, std::nextafter(kFamily.a, 1.0), heavy), 8u);
  EXPECT_EQ(synthetic_loss(kFamily, std::nextafter(kFamily.b, 0.0), heavy), 8u);
}

TEST(SyntheticRun, BudgetMonotone) {
  for (bool lh : {false, true}) {
    for (bool hh : {false, true}) {
      for (double rho : {0.1, 0.35, 0.4, 0.45, 0.9}) {
        for (Budget tau = 1; tau < 300; ++tau) {
          const auto o = synthetic_run_with_cap(kFamily, rho, {lh, hh}, tau);
          const auto next = synthetic_run_with_cap(kFamily, rho, {lh, hh}, tau + 1);
          if (o.solved) EXPECT_EQ(next, o);
        }
      }
    }
  }
}

TEST(SyntheticPartition, ThreeCellsWithRegionBoundaries) {
  Rng rng(5);
  std::vector<SyntheticInstance> sample;
  for (int i = 0; i < 200; ++i) sample.push_back(synthetic_sample(rng));
  for (Budget tau : {1ull, 8ull, 16ull, 100ull, 256ull, 1000ull}) {
    const auto cells = synthetic_partition(kFamily, sample, tau);
    ASSERT_EQ(cells.size(), 3u);
    EXPECT_EQ(check_partition(cells, ParamSpace(1), tau, sample.size()), "");
    EXPECT_TRUE(cells[0].cell.contains(kFamily.a));
    EXPECT_FALSE(cells[1].cell.contains(kFamily.a));
    EXPECT_TRUE(cells[2].cell.contains(kFamily.b));
  }
  const auto cells = synthetic_partition(kFamily, sample, 8);
  EXPECT_DOUBLE_EQ(cells[1].z, 1.0);
  for (Budget l : cells[1].capped_losses) EXPECT_EQ(l, 8u);
  double light = 0;
  for (const auto& s : sample) light += !s.low_heavy;
  EXPECT_DOUBLE_EQ(cells[0].z, light / sample.size());
}

TEST(SyntheticPartition, SoundOnAGrid) {
  Rng rng(6);
  std::vector<SyntheticInstance> sample;
  for (int i = 0; i < 50; ++i) sample.push_back(synthetic_sample(rng));
  const auto cells = synthetic_partition(kFamily, sample, 16);
  for (int g = 0; g <= 1000; ++g) {
    const double rho = g / 1000.0;
    int owners = 0;
    for (const auto& c : cells) {
      if (!c.cell.contains(rho)) continue;
      ++owners;
      std::size_t solved = 0;
      for (std::size_t i = 0; i < sample.size(); ++i) {
        const auto o = synthetic_run_with_cap(kFamily, rho, sample[i], 16);
        EXPECT_EQ(o.capped_loss(), c.capped_losses[i]);
        solved += o.solved;
      }
      EXPECT_DOUBLE_EQ(c.z, double(solved) / sample.size());
    }
    EXPECT_EQ(owners, 1) << rho;
  }
}

TEST(SyntheticExact, OptIsTheMiddleRegion) {
  for (double delta : {0.05, 0.25, 0.5, 0.9}) {
    const auto opt = synthetic_exact_opt(kFamily, delta);
    EXPECT_DOUBLE_EQ(opt.opt_quarter, 8.0);
  }
  const auto opt = synthetic_exact_opt(kFamily, 0.25);
  EXPECT_EQ(opt.t_quarter[static_cast<int>(Region::low)], 16u);
  EXPECT_DOUBLE_EQ(opt.capped_mean[static_cast<int>(Region::low)], 12.0);
  EXPECT_EQ(opt.t_quarter[static_cast<int>(Region::high)], 256u);
  EXPECT_DOUBLE_EQ(opt.capped_mean[static_cast<int>(Region::high)], 132.0);
  EXPECT_EQ(opt.t_quarter[static_cast<int>(Region::middle)], 8u);
}

TEST(SyntheticExact, EmpiricalCappedMeansMatchClosedForm) {
  Rng rng(7);
  const int draws = 100000;
  for (double rho : {0.2, 0.4, 0.7}) {
    for (Budget cap : {16ull, 256ull}) {
      double sum = 0.0, sq = 0.0;
      for (int i = 0; i < draws; ++i) {
        const double l = double(std::min(synthetic_loss(kFamily, rho, synthetic_sample(rng)), cap));
        sum += l;
        sq += l * l;
      }
      const double mean = sum / draws;
      const double se = std::sqrt(std::max(sq / draws - mean * mean, 0.0) / draws);
      EXPECT_NEAR(mean, exact_capped_loss(kFamily, rho, cap), 3 * se + 1e-12) << rho << ' ' << cap;
    }
  }
}

TEST(SyntheticProblem, FIsConstant) {
  SyntheticProblem problem(kFamily);
  Rng rng(8);
  std::vector<InstanceHandle> s;
  for (int i = 0; i < 10; ++i) s.push_back(problem.sample(rng));
  EXPECT_EQ(problem.f_bound(s, 8), 3u);
  EXPECT_EQ(problem.get_partition(s, 8).size(), 3u);
  EXPECT_THROW(decode(InstanceHandle{Domain::bnb, 0, 0}), std::invalid_argument);
}

}  // namespace
}  // namespace frugal::synthetic
