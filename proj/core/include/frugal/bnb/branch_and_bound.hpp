#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "frugal/bnb/lp.hpp"
#include "frugal/core/rho_probe.hpp"
#include "frugal/core/types.hpp"

namespace frugal::bnb {

/// Objective decrease charged for an infeasible child.
inline constexpr double kInfeasibleDecrease = 1e9;

/// Absolute tree-size limit; a search reaching it stops and reports the
/// nodes built so far as its loss.
inline constexpr Budget kMaxTreeSize = Budget{1} << 15;

struct BnbNode {
  Fixing fixing;
  LpSolution lp;
  std::size_t depth = 0;
  std::size_t id = 0;
};

struct BranchDecision {
  std::size_t node = 0;
  std::size_t variable = 0;

  friend bool operator==(const BranchDecision&, const BranchDecision&) = default;
};

struct BnbResult {
  CappedRunOutcome outcome;
  /// Nodes built before the search finished or stopped.
  Budget tree_size = 0;
  /// True when the open list emptied, so `incumbent` is a proven optimum.
  bool completed = false;
  std::optional<double> incumbent_value;
  std::vector<double> incumbent;
  std::vector<BranchDecision> decisions;
};

/// (score1, score2) = (min, max) of the objective decreases of the two
/// children obtained by fixing variable i. Throws std::invalid_argument if i
/// is already fixed at `node` or the node LP is infeasible.
std::pair<double, double> scores(const LpOracle& oracle, const BnbNode& node, std::size_t i);

/// Best-first branch and bound with variable selection
/// argmax_i rho*score1 + (1-rho)*score2. Every rho-dependent choice is made by
/// `probe`. The loss is the tree size (root plus two nodes per branching);
/// branching that would push the tree past `cap` stops the run as exceeded.
BnbResult bnb_execute(const LpOracle& oracle, RhoProbe& probe, Budget cap);

BnbResult bnb_solve(const LpOracle& oracle, double rho, Budget cap);

CappedRunOutcome bnb_run(const Milp& milp, double rho, Budget cap);
CappedRunOutcome bnb_run(const LpOracle& oracle, double rho, Budget cap);

}  // namespace frugal::bnb
