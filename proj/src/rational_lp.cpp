// Copyright 2026 The simplegame Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "simplegame/rational_lp.hpp"

#include <atomic>
#include <stdexcept>
#include <string>
#include <utility>

namespace simplegame::lp {

namespace {

std::atomic<std::uint64_t> g_solves{0};
std::atomic<std::uint64_t> g_verified{0};
std::atomic<std::uint64_t> g_failed{0};

int sign_of(Relation r) { return r == Relation::kGreaterEqual ? 1 : -1; }

class Tableau {
 public:
  // Columns: structural (one per nonnegative variable, two per free one),
  // then one surplus per row, then one artificial per row.
  explicit Tableau(const LinearProgram& lp) : lp_(lp) {
    const int n = lp.num_vars();
    for (int j = 0; j < n; ++j) {
      column_var_.push_back({j, 1});
      if (!lp.nonnegative()[j]) column_var_.push_back({j, -1});
    }
    structural_ = static_cast<int>(column_var_.size());
    rows_ = static_cast<int>(lp.constraints().size());
    cols_ = structural_ + 2 * rows_;
    a_.assign(rows_, std::vector<Rational>(cols_ + 1));
    row_flip_.assign(rows_, 1);
    basis_.resize(rows_);
    for (int i = 0; i < rows_; ++i) {
      const auto& c = lp.constraints()[i];
      const int s = sign_of(c.relation);
      Rational rhs = s * c.rhs;
      const int flip = rhs < 0 ? -1 : 1;
      row_flip_[i] = flip;
      for (int k = 0; k < structural_; ++k) {
        auto [var, dir] = column_var_[k];
        a_[i][k] = flip * s * dir * c.coefficients[var];
      }
      a_[i][structural_ + i] = -flip;
      a_[i][structural_ + rows_ + i] = 1;
      a_[i][cols_] = flip * rhs;
      basis_[i] = structural_ + rows_ + i;
    }
    // Reduced costs of sum(artificials); last entry is minus the objective.
    cost_.assign(cols_ + 1, 0);
    for (int k = 0; k < cols_ + 1; ++k) {
      if (k >= structural_ + rows_ && k < cols_) continue;
      for (int i = 0; i < rows_; ++i) cost_[k] -= a_[i][k];
    }
  }

  void run() {
    for (;;) {
      int enter = -1;
      for (int k = 0; k < cols_; ++k)
        if (sgn(cost_[k]) < 0) {
          enter = k;
          break;
        }
      if (enter < 0) return;
      int leave = -1;
      Rational best;
      for (int i = 0; i < rows_; ++i) {
        if (sgn(a_[i][enter]) <= 0) continue;
        Rational ratio = a_[i][cols_] / a_[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      // The phase-one objective is bounded below by zero.
      if (leave < 0) throw std::logic_error("phase-one simplex reported unboundedness");
      pivot(leave, enter);
    }
  }

  FeasibilityResult result() const {
    FeasibilityResult out;
    const Rational objective = -cost_[cols_];
    if (sgn(objective) == 0) {
      out.status = Status::kFeasible;
      out.point.assign(lp_.num_vars(), 0);
      for (int i = 0; i < rows_; ++i) {
        if (basis_[i] >= structural_) continue;
        auto [var, dir] = column_var_[basis_[i]];
        out.point[var] += dir * a_[i][cols_];
      }
    } else {
      out.status = Status::kInfeasible;
      out.farkas.resize(rows_);
      for (int i = 0; i < rows_; ++i) {
        // Reduced cost of artificial i is 1 - y_i.
        Rational y = 1 - cost_[structural_ + rows_ + i];
        out.farkas[i] = row_flip_[i] * y;
      }
    }
    return out;
  }

 private:
  void pivot(int row, int col) {
    auto& pr = a_[row];
    const Rational p = pr[col];
    for (auto& v : pr)
      if (sgn(v) != 0) v /= p;
    for (int i = 0; i < rows_; ++i) {
      if (i == row || sgn(a_[i][col]) == 0) continue;
      eliminate(a_[i], pr, col);
    }
    if (sgn(cost_[col]) != 0) eliminate(cost_, pr, col);
    basis_[row] = col;
  }

  static void eliminate(std::vector<Rational>& target, const std::vector<Rational>& pivot_row,
                        int col) {
    const Rational factor = target[col];
    for (std::size_t k = 0; k < target.size(); ++k)
      if (sgn(pivot_row[k]) != 0) target[k] -= factor * pivot_row[k];
  }

  const LinearProgram& lp_;
  std::vector<std::pair<int, int>> column_var_;
  int structural_ = 0;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> cost_;
  std::vector<int> row_flip_;
  std::vector<int> basis_;
};

}  // namespace

LinearProgram::LinearProgram(int num_vars) : num_vars_(num_vars), nonnegative_(num_vars, false) {
  if (num_vars < 1) throw std::invalid_argument("a linear program needs at least one variable");
}

void LinearProgram::add(std::vector<Rational> coefficients, Relation relation, Rational rhs) {
  if (static_cast<int>(coefficients.size()) != num_vars_)
    throw std::invalid_argument("constraint has " + std::to_string(coefficients.size()) +
                                " coefficients, expected " + std::to_string(num_vars_));
  constraints_.push_back({std::move(coefficients), relation, std::move(rhs)});
}

void LinearProgram::set_nonnegative(int var, bool nonnegative) {
  nonnegative_.at(var) = nonnegative;
}

void LinearProgram::set_all_nonnegative() { nonnegative_.assign(num_vars_, true); }

bool verify_certificate(const LinearProgram& lp, const FeasibilityResult& result) {
  const auto& rows = lp.constraints();
  const int n = lp.num_vars();
  if (result.feasible()) {
    if (static_cast<int>(result.point.size()) != n) return false;
    for (int j = 0; j < n; ++j)
      if (lp.nonnegative()[j] && sgn(result.point[j]) < 0) return false;
    for (const auto& c : rows) {
      Rational lhs = 0;
      for (int j = 0; j < n; ++j) lhs += c.coefficients[j] * result.point[j];
      if (c.relation == Relation::kGreaterEqual ? lhs < c.rhs : lhs > c.rhs) return false;
    }
    return true;
  }
  if (result.farkas.size() != rows.size()) return false;
  std::vector<Rational> combined(n, 0);
  Rational rhs = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Rational& mu = result.farkas[i];
    if (sgn(mu) < 0) return false;
    if (sgn(mu) == 0) continue;
    const int s = sign_of(rows[i].relation);
    for (int j = 0; j < n; ++j) combined[j] += s * mu * rows[i].coefficients[j];
    rhs += s * mu * rows[i].rhs;
  }
  for (int j = 0; j < n; ++j) {
    const int sg = sgn(combined[j]);
    if (lp.nonnegative()[j] ? sg > 0 : sg != 0) return false;
  }
  return sgn(rhs) > 0;
}

FeasibilityResult solve_feasibility(const LinearProgram& lp) {
  FeasibilityResult out;
  if (lp.constraints().empty()) {
    out.status = Status::kFeasible;
    out.point.assign(lp.num_vars(), 0);
  } else {
    Tableau t(lp);
    t.run();
    out = t.result();
  }
  ++g_solves;
  if (!verify_certificate(lp, out)) {
    ++g_failed;
    throw std::logic_error("simplex produced a certificate that does not verify");
  }
  ++g_verified;
  return out;
}

AuditCounters audit_counters() { return {g_solves.load(), g_verified.load(), g_failed.load()}; }

void reset_audit_counters() {
  g_solves = 0;
  g_verified = 0;
  g_failed = 0;
}

}  // namespace simplegame::lp
