#include <gtest/gtest.h>

#include <cmath>

#include "frugal/core/types.hpp"
#include "frugal/stats/concentration.hpp"
#include "oracles.hpp"

namespace frugal::stats {
namespace {

GammaInputs inputs(std::uint64_t t, std::uint64_t b, std::uint64_t tau, std::uint64_t f,
                   double zeta = 0.05, std::uint64_t d = 1) {
  GammaInputs in;
  in.round = t;
  in.samples = b;
  in.cap = tau;
  in.f_value = f;
  in.dimension = d;
  in.zeta = zeta;
  return in;
}

TEST(GammaBound, UnitFLeavesOnlyTheConfidenceTerm) {
  const double b = 1000.0;
  const double expected =
      2.0 * std::sqrt((2.0 / b) * (std::log(8.0) + 2.0 * std::log(16.0 * b * 4.0) - std::log(0.05)));
  EXPECT_NEAR(gamma_bound(inputs(4, 1000, 16, 1)), expected, 1e-12);
}

TEST(GammaBound, DecreasesWithSampleSize) {
  EXPECT_LT(gamma_bound(inputs(3, 1000000, 8, 3)), gamma_bound(inputs(3, 1000, 8, 3)));
}

TEST(GammaBound, MatchesIndependentEvaluation) {
  const double ref = static_cast<double>(testing::reference_gamma(3, 100000, 8, 3, 1, 0.05));
  EXPECT_NEAR(gamma_bound(inputs(3, 100000, 8, 3)), ref, 1e-12);
  Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const auto t = 1 + uniform_index(rng, 30);
    const auto b = 1 + uniform_index(rng, 1000000);
    const auto tau = std::uint64_t{1} << (1 + uniform_index(rng, 30));
    const auto f = 1 + uniform_index(rng, 100000);
    const double zeta = 0.001 + 0.998 * uniform_unit(rng);
    const double mine = gamma_bound(inputs(t, b, tau, f, zeta));
    const double theirs = static_cast<double>(testing::reference_gamma(t, b, tau, f, 1, zeta));
    EXPECT_NEAR(mine, theirs, 1e-12) << t << ' ' << b << ' ' << tau << ' ' << f << ' ' << zeta;
  }
}

TEST(GammaBound, VanishesWithPolynomialF) {
  double previous = std::numeric_limits<double>::infinity();
  for (std::uint64_t b : {1000ull, 10000ull, 100000ull, 1000000ull}) {
    const double g = gamma_bound(inputs(5, b, 32, b));
    EXPECT_LT(g, previous);
    previous = g;
  }
  EXPECT_LT(previous, 0.05);
}

TEST(GammaBound, MonotoneInEachArgument) {
  const GammaInputs base = inputs(4, 5000, 16, 10, 0.1);
  const double g = gamma_bound(base);
  auto more_f = base;
  more_f.f_value = 11;
  auto more_tau = base;
  more_tau.cap = 32;
  auto more_t = base;
  more_t.round = 5;
  auto less_zeta = base;
  less_zeta.zeta = 0.05;
  EXPECT_GE(gamma_bound(more_f), g);
  EXPECT_GE(gamma_bound(more_tau), g);
  EXPECT_GE(gamma_bound(more_t), g);
  EXPECT_GE(gamma_bound(less_zeta), g);
}

TEST(GammaBound, RejectsBadInputs) {
  EXPECT_THROW(gamma_bound(inputs(0, 1, 1, 1)), std::invalid_argument);
  EXPECT_THROW(gamma_bound(inputs(1, 0, 1, 1)), std::invalid_argument);
  EXPECT_THROW(gamma_bound(inputs(1, 1, 0, 1)), std::invalid_argument);
  EXPECT_THROW(gamma_bound(inputs(1, 1, 1, 0)), std::invalid_argument);
  EXPECT_THROW(gamma_bound(inputs(1, 1, 1, 1, 1.0)), std::invalid_argument);
}

TEST(Massart, Examples) {
  EXPECT_DOUBLE_EQ(massart_bound({{3.0, -1.0, 2.0}}), 0.0);
  const double two = massart_bound({{1, 1, 1, 1}, {0, 0, 0, 0}});
  EXPECT_NEAR(two, 2.0 * std::sqrt(2.0 * std::log(2.0)) / 4.0, 1e-15);
  EXPECT_NEAR(two, 0.5887, 1e-4);
  const double scaled = massart_bound({{2.5, 2.5, 2.5, 2.5}, {0, 0, 0, 0}});
  EXPECT_NEAR(scaled, 2.5 * two, 1e-12);
  EXPECT_THROW(massart_bound({{1, 2}, {1}}), std::invalid_argument);
  // Duplicates do not enlarge the class.
  EXPECT_DOUBLE_EQ(massart_bound({{1, 1}, {1, 1}}), 0.0);
}

TEST(Rademacher, ExactModeExamples) {
  EXPECT_NEAR(mc_rademacher({{0.3, -2.0, 1.0, 4.0}}, 1, 0), 0.0, 1e-15);
  // Patterns (+,+) -> 1, the other three -> 0.
  EXPECT_DOUBLE_EQ(mc_rademacher({{1, 1}, {0, 0}}, 1, 0), 0.25);
  EXPECT_LE(0.25, massart_bound({{1, 1}, {0, 0}}));
  EXPECT_NEAR(massart_bound({{1, 1}, {0, 0}}), 0.832, 1e-3);
  EXPECT_THROW(mc_rademacher({{1, 1}}, 0, 0), std::invalid_argument);
}

TEST(Rademacher, ZeroVectorFloorsTheSupremum) {
  Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    std::vector<double> v(8);
    for (auto& x : v) x = uniform_unit(rng) * 4.0 - 2.0;
    EXPECT_GE(mc_rademacher({v, std::vector<double>(8, 0.0)}, 1, 0), 0.0);
  }
}

TEST(Rademacher, ExactMatchesDirectEnumeration) {
  const std::vector<std::vector<double>> set{{1, -2, 0.5}, {0, 1, 1}, {2, 2, -1}};
  double total = 0.0;
  for (int mask = 0; mask < 8; ++mask) {
    double best = -1e300;
    for (const auto& v : set) {
      double c = 0.0;
      for (int i = 0; i < 3; ++i) c += ((mask >> i) & 1 ? -1.0 : 1.0) * v[i];
      best = std::max(best, c);
    }
    total += best;
  }
  EXPECT_NEAR(mc_rademacher(set, 1, 0), total / 8.0 / 3.0, 1e-15);
}

TEST(Rademacher, SampledModeApproachesExactValue) {
  Rng rng(4);
  std::vector<std::vector<double>> set(5, std::vector<double>(24));
  for (auto& v : set) {
    for (auto& x : v) x = uniform_unit(rng);
  }
  const double sampled = mc_rademacher(set, 20000, 9);
  EXPECT_GT(sampled, 0.0);
  EXPECT_LE(sampled, massart_bound(set));
  EXPECT_EQ(sampled, mc_rademacher(set, 20000, 9));
}

TEST(Rademacher, NeverExceedsMassartOnRandomSets) {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + uniform_index(rng, 16);
    const std::size_t k = 1 + uniform_index(rng, 6);
    std::vector<std::vector<double>> set(k, std::vector<double>(n));
    for (auto& v : set) {
      for (auto& x : v) x = static_cast<double>(uniform_index(rng, 33));
    }
    EXPECT_LE(mc_rademacher(set, 1, 0), massart_bound(set) + 1e-12);
  }
}

}  // namespace
}  // namespace frugal::stats
