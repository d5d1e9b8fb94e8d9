// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "frugal/bnb/branch_and_bound.hpp"
#include "frugal/bnb/lp.hpp"
#include "frugal/bnb/partition.hpp"
#include "frugal/clustering/instance.hpp"
#include "frugal/clustering/linkage.hpp"
#include "frugal/clustering/partition.hpp"
#include "frugal/clustering/pruning.hpp"
#include "frugal/learner/learner.hpp"
#include "frugal/learner/selector.hpp"
#include "frugal/stats/concentration.hpp"
#include "frugal/synthetic/family.hpp"
#include "oracles.hpp"

#ifdef FRUGAL_SOURCE_DIR
#include "commands.hpp"
#endif

namespace {

using namespace frugal;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), pattern, args...);
  return buf;
}

const synthetic::SyntheticFamily kFamily{};
constexpr double kEpsilon = 15.0;
constexpr double kDelta = 0.25;
constexpr int kSeeds = 20;

struct SyntheticRun {
  learner::OptimalSubsetResult result;
  double seconds = 0.0;
};

// The twenty default-config runs shared by the synthetic criteria.
const std::vector<SyntheticRun>& synthetic_runs() {
  static const std::vector<SyntheticRun> runs = [] {
    std::vector<SyntheticRun> out;
    for (int seed = 1; seed <= kSeeds; ++seed) {
      synthetic::SyntheticProblem problem(kFamily);
      learner::LearnerConfig cfg;
      cfg.epsilon = kEpsilon;
      cfg.delta = kDelta;
      cfg.zeta = 0.05;
      cfg.seed = static_cast<std::uint64_t>(seed);
      const auto start = Clock::now();
      SyntheticRun run;
      run.result = learner::learn_subset(problem, cfg);
      run.seconds = seconds_since(start);
      out.push_back(std::move(run));
    }
    return out;
  }();
  return runs;
}

Verdict ac1_trajectory() {
  const auto& runs = synthetic_runs();
  const double opt = synthetic::synthetic_exact_opt(kFamily, kDelta).opt_quarter;
  const double ceiling = 16.0 / kDelta * std::pow(1.0 + kEpsilon, 0.25) * opt;
  int good = 0;
  double total = 0.0;
  std::uint64_t max_calls = 0;
  for (const auto& run : runs) {
    const auto& r = run.result;
    total += run.seconds;
    max_calls = std::max(max_calls, r.oracle_calls);
    bool set_at_three = false;
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
      if (r.trace[i].t != 3) continue;
      set_at_three = r.trace[i].T == 8.0 && i > 0 && std::isinf(r.trace[i - 1].T);
    }
    const bool stops = r.t_bar == 8;
    bool middle = false;
    for (const auto& p : r.parameters) middle |= p.rho() > kFamily.a && p.rho() < kFamily.b;
    const bool bounded = std::ldexp(1.0, static_cast<int>(r.t_bar)) <= ceiling;
    good += set_at_three && stops && middle && bounded;
  }
  return {good >= 19 && total <= 60.0,
          fmt("%d/20 seeds; %.1fs total; bound 2^t_bar <= %.0f; max oracle calls %llu", good, total,
              ceiling, static_cast<unsigned long long>(max_calls))};
}

Verdict ac2_sandwich() {
  int good = 0;
  std::size_t checked = 0;
  for (const auto& run : synthetic_runs()) {
    bool ok = true;
    for (const auto& e : run.result.entries) {
      const auto& iv = e.cell.intervals.front();
      for (int k = 1; k <= 10; ++k) {
        const double rho = iv.lo + (iv.hi - iv.lo) * k / 11.0;
        const Budget lo = synthetic::exact_t_delta(kFamily, rho, kDelta / 2);
        const Budget hi = synthetic::exact_t_delta(kFamily, rho, kDelta / 4);
        ok &= lo <= e.tau_prime && e.tau_prime <= hi;
        ++checked;
      }
    }
    good += ok;
  }
  return {good >= 19, fmt("%d/20 seeds; %zu (entry, rho) checks", good, checked)};
}

Verdict ac3_optimality() {
  int subset_good = 0;
  int select_good = 0;
  const double subset_bound = std::sqrt(1.0 + kEpsilon) * 8.0;
  const double select_bound = (1.0 + kEpsilon) * 8.0;
  for (int i = 0; i < kSeeds; ++i) {
    const auto& r = synthetic_runs()[i].result;
    bool any = false;
    for (const auto& p : r.parameters) {
      const Budget cap = synthetic::exact_t_delta(kFamily, p.rho(), kDelta / 2);
      any |= synthetic::exact_capped_loss(kFamily, p.rho(), cap) <= subset_bound;
    }
    subset_good += any;
    if (r.parameters.empty()) continue;

    synthetic::SyntheticProblem problem(kFamily);
    learner::SelectionConfig sel;
    sel.eps_prime = learner::selection_epsilon(kEpsilon);
    sel.delta_prime = learner::selection_delta(kDelta);
    sel.ceiling = learner::default_ceiling(r.t_bar);
    Rng rng(1000 + static_cast<std::uint64_t>(i));
    const auto chosen = learner::select_finite(problem, r.parameters, sel, rng);
    const double rho = chosen.parameter.rho();
    const Budget t_delta = synthetic::exact_t_delta(kFamily, rho, kDelta);
    select_good += synthetic::exact_capped_loss(kFamily, rho, t_delta) <= select_bound;
  }
  return {subset_good >= 19 && select_good >= 18,
          fmt("subset %d/20 (bound %.0f); select %d/20 (bound %.0f)", subset_good, subset_bound,
              select_good, select_bound)};
}

Verdict ac4_sample_growth() {
  const auto& r = synthetic_runs().front().result;
  const double target = r.eta * kDelta;
  std::size_t rounds = 0;
  std::size_t exact = 0;
  for (const auto& row : r.trace) {
    if (row.samples == 0) continue;
    ++rounds;
    exact += row.samples == testing::least_sample_size(row.t, 3, 0.05, target);
  }
  synthetic::SyntheticProblem problem(kFamily);
  learner::LearnerConfig base;
  base.epsilon = kEpsilon;
  base.delta = kDelta;
  learner::LearnerConfig halved = base;
  // eta = 1/18, half of the capped 1/9.
  halved.epsilon = std::pow(13.0 / 9.0, 4) - 1.0;
  Rng a(5), b(5);
  const double coarse = double(learner::grow_sample(problem, 3, base, a).instances.size());
  const double fine = double(learner::grow_sample(problem, 3, halved, b).instances.size());
  const double ratio = fine / coarse;
  return {exact == rounds && rounds > 0 && ratio >= 3.5 && ratio <= 4.5,
          fmt("%zu/%zu rounds match the scalar solve; ratio at t=3 %.3f", exact, rounds, ratio)};
}

Verdict ac5_bnb() {
  const auto start = Clock::now();
  Rng rng(2024);
  std::size_t grid_checks = 0, grid_bad = 0, incumbent_bad = 0, count_bad = 0;
  std::size_t max_cells = 0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 1 + uniform_index(rng, 6);
    const std::size_t m = 1 + uniform_index(rng, 4);
    const bnb::Milp milp = bnb::random_milp(rng, n, m);
    const bnb::LpOracle oracle(milp);
    for (Budget tau : {7ull, 15ull, 31ull}) {
      const auto cells = bnb::bnb_instance_cells(oracle, tau);
      max_cells = std::max(max_cells, cells.size());
      count_bad += cells.size() > bnb::f_bound_bnb_analytic(1, n, tau);
      std::size_t idx = 0;
      for (int g = 0; g <= 1000; ++g) {
        const double rho = g / 1000.0;
        while (idx < cells.size() && !cells[idx].interval.contains(rho)) ++idx;
        ++grid_checks;
        if (idx == cells.size()) {
          ++grid_bad;
          idx = 0;
          continue;
        }
        grid_bad += !(bnb::bnb_run(oracle, rho, tau) == cells[idx].result);
      }
    }
    const auto full = bnb::bnb_solve(oracle, uniform_unit(rng), bnb::kMaxTreeSize);
    const auto best = testing::enumerate_binary_optimum(milp);
    const bool agree = full.completed && full.incumbent_value.has_value() == best.has_value() &&
                       (!best || std::abs(*full.incumbent_value - *best) <= 1e-6);
    incumbent_bad += !agree;
  }
  const double secs = seconds_since(start);
  return {grid_bad == 0 && incumbent_bad == 0 && count_bad == 0 && secs <= 300.0,
          fmt("%zu grid mismatches of %zu; %zu incumbent mismatches; %zu cell-count violations "
              "(max %zu cells); %.1fs",
              grid_bad, grid_checks, incumbent_bad, count_bad, max_cells, secs)};
}

std::vector<clustering::ClusteringInstance> clustering_fixtures() {
  std::vector<clustering::ClusteringInstance> out;
  out.push_back(clustering::parse_clustering(
      "4 2 3\n0 1 2 4\n1 0 2.5 4\n2 2.5 0 2.3\n4 4 2.3 0\n"));
#ifdef FRUGAL_SOURCE_DIR
  for (const char* sub : {"data/clustering/random", "data/clustering/four_point"}) {
    const fs::path dir = fs::path(FRUGAL_SOURCE_DIR) / sub;
    if (!fs::is_directory(dir)) continue;
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir)) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      auto inst = clustering::read_clustering(f);
      if (inst.n <= 8) out.push_back(std::move(inst));
    }
  }
#endif
  Rng rng(77);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 2 + uniform_index(rng, 7);
    out.push_back(clustering::random_metric(rng, n, 1 + uniform_index(rng, std::min<std::size_t>(3, n))));
  }
  return out;
}

Verdict ac6_clustering() {
  const auto four = clustering_fixtures().front();
  const std::vector<clustering::ClusteringInstance> one{four};
  const auto cells = clustering::clustering_partition(one, 3);
  const bool breakpoint = cells.size() == 2 &&
                          std::abs(cells[1].cell.intervals.front().lo - 0.4) <= 1e-9;

  std::size_t dp_checks = 0, dp_bad = 0, grid_bad = 0, mono_bad = 0;
  const auto fixtures = clustering_fixtures();
  for (const auto& inst : fixtures) {
    for (double rho : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      for (std::size_t tau = 0; tau < inst.n; ++tau) {
        const auto forest = clustering::capped_linkage_run(inst, rho, tau);
        for (std::size_t k = 1; k <= std::min<std::size_t>(3, inst.n); ++k) {
          const double dp = clustering::best_pruning(forest, k, inst).cost;
          const double brute = testing::brute_force_pruning(forest, k, inst);
          ++dp_checks;
          dp_bad += std::isinf(brute) ? !std::isinf(dp) : std::abs(dp - brute) > 1e-9;
        }
      }
    }
    const auto lcells = clustering::linkage_cells(inst, inst.n - 1);
    std::size_t idx = 0;
    for (int g = 0; g <= 1000; ++g) {
      const double rho = g / 1000.0;
      while (idx < lcells.size() && !lcells[idx].interval.contains(rho)) ++idx;
      if (idx == lcells.size()) {
        ++grid_bad;
        idx = 0;
        continue;
      }
      grid_bad += clustering::capped_linkage_run(inst, rho, inst.n - 1).merges != lcells[idx].result.merges;
    }
  }
  Rng rng(91);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + uniform_index(rng, 11);
    const auto inst = clustering::random_metric(rng, n, 1 + uniform_index(rng, std::min<std::size_t>(3, n)));
    const auto forest = clustering::capped_linkage_run(inst, uniform_unit(rng), n - 1);
    double previous = std::numeric_limits<double>::infinity();
    for (std::size_t tau = 0; tau < n; ++tau) {
      const double cost = clustering::best_pruning(forest.prefix(tau), inst.k, inst).cost;
      mono_bad += cost > previous;
      previous = cost;
    }
  }
  return {breakpoint && dp_bad == 0 && grid_bad == 0 && mono_bad == 0,
          fmt("breakpoint %s; DP %zu/%zu mismatches over %zu fixtures; %zu grid mismatches; %zu "
              "monotonicity violations",
              breakpoint ? "ok" : "wrong", dp_bad, dp_checks, fixtures.size(), grid_bad, mono_bad)};
}

Verdict ac7_concentration() {
  Rng rng(8);
  std::size_t rad_bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + uniform_index(rng, 16);
    const std::size_t k = 1 + uniform_index(rng, 6);
    std::vector<std::vector<double>> set(k, std::vector<double>(n));
    for (auto& v : set) {
      for (auto& x : v) x = static_cast<double>(uniform_index(rng, 33));
    }
    rad_bad += stats::mc_rademacher(set, 1, 0) > stats::massart_bound(set) + 1e-12;
  }
  std::size_t gamma_bad = 0, mono_bad = 0;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    stats::GammaInputs in;
    in.round = 1 + uniform_index(rng, 30);
    in.samples = 1 + uniform_index(rng, 1000000);
    in.cap = std::uint64_t{1} << (1 + uniform_index(rng, 30));
    in.f_value = 1 + uniform_index(rng, 100000);
    in.dimension = 1;
    in.zeta = 0.001 + 0.998 * uniform_unit(rng);
    const double mine = stats::gamma_bound(in);
    const double ref = static_cast<double>(
        testing::reference_gamma(in.round, in.samples, in.cap, in.f_value, 1, in.zeta));
    worst = std::max(worst, std::abs(mine - ref));
    gamma_bad += std::abs(mine - ref) > 1e-12;

    auto up = in;
    up.f_value += 1;
    mono_bad += stats::gamma_bound(up) < mine;
    up = in;
    up.cap *= 2;
    mono_bad += stats::gamma_bound(up) < mine;
    up = in;
    up.round += 1;
    mono_bad += stats::gamma_bound(up) < mine;
    up = in;
    up.zeta = in.zeta / 2;
    mono_bad += stats::gamma_bound(up) < mine;
    up = in;
    up.samples *= 2;
    mono_bad += stats::gamma_bound(up) > mine;
  }
  return {rad_bad == 0 && gamma_bad == 0 && mono_bad == 0,
          fmt("%zu Rademacher violations; %zu gamma mismatches (worst %.2e); %zu monotonicity "
              "violations",
              rad_bad, gamma_bad, worst, mono_bad)};
}

#ifdef FRUGAL_SOURCE_DIR
std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    std::ifstream in(e.path(), std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    files[e.path().filename().string()] = os.str();
  }
  return files;
}
#endif

Verdict ac8_determinism() {
#ifdef FRUGAL_SOURCE_DIR
  const fs::path configs = fs::path(FRUGAL_SOURCE_DIR) / "configs";
  const fs::path root = fs::temp_directory_path() / "frugal_acceptance";
  std::size_t runs = 0, differing = 0, failed = 0;
  for (const char* name : {"synthetic", "bnb", "clustering"}) {
    const fs::path out = root / name;
    fs::remove_all(out);
    const std::string cfg = (configs / (std::string(name) + ".json")).string();
    const std::vector<std::vector<std::string>> commands{
        {"learn", "--config", cfg, "--out", out.string()},
        {"partition", "--config", cfg, "--out", out.string(), "--tau", "8"},
        {"select", "--config", cfg, "--out", out.string()},
        {"evaluate", "--config", cfg, "--out", out.string(), "--rho", "0.4", "--samples", "2000"},
    };
    for (const auto& args : commands) {
      std::ostringstream sink;
      failed += cli::run_cli(args, sink, sink) != 0;
      const auto first = snapshot(out);
      failed += cli::run_cli(args, sink, sink) != 0;
      differing += snapshot(out) != first;
      ++runs;
    }
  }
  return {differing == 0 && failed == 0,
          fmt("%zu command reruns; %zu differing; %zu failed", runs, differing, failed)};
#else
  return {false, "CLI not built"};
#endif
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"AC1 synthetic trajectory", ac1_trajectory},
      {"AC2 cutoff sandwich", ac2_sandwich},
      {"AC3 subset optimality", ac3_optimality},
      {"AC4 sample growth", ac4_sample_growth},
      {"AC5 bnb partition exactness", ac5_bnb},
      {"AC6 clustering fixtures", ac6_clustering},
      {"AC7 concentration suite", ac7_concentration},
      {"AC8 determinism", ac8_determinism},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += !v.pass;
    std::printf("%s %s: %s\n", v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
