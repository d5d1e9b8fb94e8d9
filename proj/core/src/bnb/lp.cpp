#include "frugal/bnb/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace frugal::bnb {

namespace {

constexpr double kPivotTolerance = 1e-9;
constexpr double kFeasibilityTolerance = 1e-7;

// Dense tableau for: maximize cost.x subject to rows[i].x = rhs[i], x >= 0.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, 0.0), rhs_(rows, 0.0), basis_(rows, 0),
        reduced_(cols, 0.0), allowed_(cols, true) {}

  double& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  double at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  double& rhs(std::size_t r) { return rhs_[r]; }
  std::size_t& basis(std::size_t r) { return basis_[r]; }
  std::size_t rows() const { return rows_; }
  void forbid(std::size_t c) { allowed_[c] = false; }

  void set_cost(const std::vector<double>& cost) {
    cost_ = cost;
    reduced_ = cost;
    for (std::size_t r = 0; r < rows_; ++r) {
      const double cb = cost[basis_[r]];
      if (cb == 0.0) continue;
      for (std::size_t c = 0; c < cols_; ++c) reduced_[c] -= cb * at(r, c);
    }
  }

  double objective() const {
    double v = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) v += cost_[basis_[r]] * rhs_[r];
    return v;
  }

  // Bland's rule: lowest-index improving column, then the ratio-test row whose
  // basic variable has the lowest index.
  void optimize(std::size_t& iterations) {
    while (true) {
      std::size_t enter = cols_;
      for (std::size_t c = 0; c < cols_; ++c) {
        if (allowed_[c] && reduced_[c] > kPivotTolerance) {
          enter = c;
          break;
        }
      }
      if (enter == cols_) return;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < rows_; ++r) {
        if (at(r, enter) > kPivotTolerance) best = std::min(best, rhs_[r] / at(r, enter));
      }
      std::size_t leave = rows_;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (at(r, enter) <= kPivotTolerance || rhs_[r] / at(r, enter) > best + 1e-12) continue;
        if (leave == rows_ || basis_[r] < basis_[leave]) leave = r;
      }
      if (leave == rows_) throw std::runtime_error("lp_relax: unbounded relaxation");
      if (++iterations > kSimplexIterationLimit) {
        throw std::runtime_error("lp_relax: simplex iteration limit exceeded");
      }
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const double p = at(row, col);
    for (std::size_t c = 0; c < cols_; ++c) at(row, c) /= p;
    rhs_[row] /= p;
    at(row, col) = 1.0;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row) continue;
      const double f = at(r, col);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < cols_; ++c) {
        double& v = at(r, c);
        v -= f * at(row, c);
        if (std::abs(v) < 1e-13) v = 0.0;
      }
      at(r, col) = 0.0;
      rhs_[r] -= f * rhs_[row];
      if (std::abs(rhs_[r]) < 1e-13) rhs_[r] = 0.0;
    }
    const double f = reduced_[col];
    if (f != 0.0) {
      for (std::size_t c = 0; c < cols_; ++c) reduced_[c] -= f * at(row, c);
      reduced_[col] = 0.0;
    }
    basis_[row] = col;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> a_;
  std::vector<double> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<double> cost_;
  std::vector<double> reduced_;
  std::vector<bool> allowed_;
};

double snap(double v) { return std::round(v / kObjectiveGrid) * kObjectiveGrid; }

}  // namespace

LpSolution lp_relax(const Milp& milp, Fixing fixing) {
  LpSolution out;
  out.x.assign(milp.n, 0.0);

  std::vector<std::size_t> free_vars;
  double constant = 0.0;
  for (std::size_t i = 0; i < milp.n; ++i) {
    if (fixing.is_fixed(i)) {
      const double v = (fixing.value >> i) & 1u ? 1.0 : 0.0;
      out.x[i] = v;
      constant += milp.c[i] * v;
    } else {
      free_vars.push_back(i);
    }
  }

  // Rows: the original constraints with fixed columns moved right, then
  // x_i <= 1 for every free variable.
  const std::size_t k = free_vars.size();
  const std::size_t rows = milp.rows() + k;
  std::vector<std::vector<double>> coef(rows, std::vector<double>(k, 0.0));
  std::vector<double> rhs(rows, 0.0);
  for (std::size_t r = 0; r < milp.rows(); ++r) {
    double b = milp.b[r];
    for (std::size_t i = 0; i < milp.n; ++i) {
      if (fixing.is_fixed(i)) b -= milp.A[r][i] * out.x[i];
    }
    for (std::size_t j = 0; j < k; ++j) coef[r][j] = milp.A[r][free_vars[j]];
    rhs[r] = (b < 0.0 && b > -kPivotTolerance) ? 0.0 : b;
  }
  for (std::size_t j = 0; j < k; ++j) {
    coef[milp.rows() + j][j] = 1.0;
    rhs[milp.rows() + j] = 1.0;
  }

  std::vector<std::size_t> negative;
  for (std::size_t r = 0; r < rows; ++r) {
    if (rhs[r] < 0.0) negative.push_back(r);
  }

  // Columns: free variables, one slack per row, one artificial per negative row.
  const std::size_t cols = k + rows + negative.size();
  Tableau tab(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < k; ++j) tab.at(r, j) = coef[r][j];
    tab.at(r, k + r) = 1.0;
    tab.rhs(r) = rhs[r];
    tab.basis(r) = k + r;
  }
  for (std::size_t a = 0; a < negative.size(); ++a) {
    const std::size_t r = negative[a];
    for (std::size_t j = 0; j < k; ++j) tab.at(r, j) = -tab.at(r, j);
    tab.at(r, k + r) = -1.0;
    tab.rhs(r) = -tab.rhs(r);
    tab.at(r, k + rows + a) = 1.0;
    tab.basis(r) = k + rows + a;
  }

  std::size_t iterations = 0;
  if (!negative.empty()) {
    std::vector<double> phase1(cols, 0.0);
    for (std::size_t a = 0; a < negative.size(); ++a) phase1[k + rows + a] = -1.0;
    tab.set_cost(phase1);
    tab.optimize(iterations);
    if (tab.objective() < -kFeasibilityTolerance) {
      out.status = LpSolution::Status::infeasible;
      return out;
    }
    // Pivot zero-level artificials out of the basis where possible; rows
    // where that fails are redundant and stay inert.
    for (std::size_t r = 0; r < rows; ++r) {
      if (tab.basis(r) < k + rows) continue;
      for (std::size_t c = 0; c < k + rows; ++c) {
        if (std::abs(tab.at(r, c)) > kPivotTolerance) {
          tab.pivot(r, c);
          break;
        }
      }
    }
    for (std::size_t a = 0; a < negative.size(); ++a) tab.forbid(k + rows + a);
  }

  std::vector<double> phase2(cols, 0.0);
  for (std::size_t j = 0; j < k; ++j) phase2[j] = milp.c[free_vars[j]];
  tab.set_cost(phase2);
  tab.optimize(iterations);

  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t var = tab.basis(r);
    if (var < k) out.x[free_vars[var]] = std::clamp(tab.rhs(r), 0.0, 1.0);
  }
  double value = constant;
  for (std::size_t j = 0; j < k; ++j) value += milp.c[free_vars[j]] * out.x[free_vars[j]];
  out.objective = snap(value);
  out.status = LpSolution::Status::optimal;
  return out;
}

LpOracle::LpOracle(Milp milp) : milp_(std::move(milp)) { milp_.validate(); }

LpSolution LpOracle::solve(Fixing fixing) const {
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(fixing.key());
    if (it != memo_.end()) return it->second;
  }
  LpSolution solution = lp_relax(milp_, fixing);
  std::lock_guard lock(mutex_);
  return memo_.try_emplace(fixing.key(), std::move(solution)).first->second;
}

std::size_t LpOracle::cached() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

}  // namespace frugal::bnb
