#include "frugal/bnb/branch_and_bound.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>

namespace frugal::bnb {

namespace {

constexpr double kIntegralityTolerance = 1e-7;

bool integral(const std::vector<double>& x) {
  for (double v : x) {
    if (std::abs(v - std::round(v)) > kIntegralityTolerance) return false;
  }
  return true;
}

// Highest bound first, then the deeper node, then the older node.
struct NodeOrder {
  bool operator()(const BnbNode& lhs, const BnbNode& rhs) const {
    if (lhs.lp.objective != rhs.lp.objective) return lhs.lp.objective < rhs.lp.objective;
    if (lhs.depth != rhs.depth) return lhs.depth < rhs.depth;
    return lhs.id > rhs.id;
  }
};

double decrease(const BnbNode& parent, const LpSolution& child) {
  return child.optimal() ? parent.lp.objective - child.objective : kInfeasibleDecrease;
}

}  // namespace

std::pair<double, double> scores(const LpOracle& oracle, const BnbNode& node, std::size_t i) {
  if (i >= oracle.milp().n || node.fixing.is_fixed(i)) {
    throw std::invalid_argument("scores: variable already fixed or out of range");
  }
  if (!node.lp.optimal()) throw std::invalid_argument("scores: node LP is infeasible");
  const double up = decrease(node, oracle.solve(node.fixing.with(i, true)));
  const double down = decrease(node, oracle.solve(node.fixing.with(i, false)));
  return {std::min(up, down), std::max(up, down)};
}

BnbResult bnb_execute(const LpOracle& oracle, RhoProbe& probe, Budget cap) {
  const Milp& milp = oracle.milp();
  BnbResult result;
  std::size_t next_id = 0;
  BnbNode root{Fixing{}, oracle.solve(Fixing{}), 0, next_id++};
  result.tree_size = 1;

  std::priority_queue<BnbNode, std::vector<BnbNode>, NodeOrder> open;
  if (root.lp.optimal()) open.push(std::move(root));

  std::vector<std::size_t> candidates;
  std::vector<AffineScore> line;
  while (!open.empty()) {
    BnbNode node = open.top();
    open.pop();
    if (result.incumbent_value && node.lp.objective <= *result.incumbent_value) continue;
    if (integral(node.lp.x)) {
      result.incumbent_value = node.lp.objective;
      result.incumbent = node.lp.x;
      for (double& v : result.incumbent) v = std::round(v);
      continue;
    }

    if (result.tree_size + 2 > kMaxTreeSize) {
      result.outcome = CappedRunOutcome::solved_at(result.tree_size);
      return result;
    }
    if (result.tree_size + 2 > cap) {
      result.outcome = CappedRunOutcome::exceeded(cap);
      return result;
    }

    candidates.clear();
    line.clear();
    for (std::size_t i = 0; i < milp.n; ++i) {
      if (node.fixing.is_fixed(i)) continue;
      const auto [s1, s2] = scores(oracle, node, i);
      candidates.push_back(i);
      line.push_back(AffineScore{s2, s1});
    }
    const std::size_t var = candidates[probe.argmax(line)];
    result.decisions.push_back(BranchDecision{node.id, var});
    result.tree_size += 2;

    for (bool one : {true, false}) {
      const Fixing child_fix = node.fixing.with(var, one);
      BnbNode child{child_fix, oracle.solve(child_fix), node.depth + 1, next_id++};
      if (child.lp.optimal()) open.push(std::move(child));
    }
  }
  result.completed = true;
  result.outcome = result.tree_size <= cap ? CappedRunOutcome::solved_at(result.tree_size)
                                           : CappedRunOutcome::exceeded(cap);
  return result;
}

BnbResult bnb_solve(const LpOracle& oracle, double rho, Budget cap) {
  RhoProbe probe = RhoProbe::at(rho);
  return bnb_execute(oracle, probe, cap);
}

CappedRunOutcome bnb_run(const LpOracle& oracle, double rho, Budget cap) {
  return bnb_solve(oracle, rho, cap).outcome;
}

CappedRunOutcome bnb_run(const Milp& milp, double rho, Budget cap) {
  const LpOracle oracle(milp);
  return bnb_run(oracle, rho, cap);
}

}  // namespace frugal::bnb
