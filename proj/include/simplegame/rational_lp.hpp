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

#ifndef SIMPLEGAME_RATIONAL_LP_HPP_
#define SIMPLEGAME_RATIONAL_LP_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace simplegame::lp {

using Rational = mpq_class;

enum class Relation { kGreaterEqual, kLessEqual };

struct LinearConstraint {
  std::vector<Rational> coefficients;
  Relation relation;
  Rational rhs;
};

// A system of linear inequalities over rational variables, some of which
// are sign constrained. Only feasibility is ever asked of it.
class LinearProgram {
 public:
  explicit LinearProgram(int num_vars);

  int num_vars() const { return num_vars_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }
  const std::vector<bool>& nonnegative() const { return nonnegative_; }

  void add(std::vector<Rational> coefficients, Relation relation, Rational rhs);
  void set_nonnegative(int var, bool nonnegative = true);
  void set_all_nonnegative();

 private:
  int num_vars_;
  std::vector<LinearConstraint> constraints_;
  std::vector<bool> nonnegative_;
};

enum class Status { kFeasible, kInfeasible };

// On kFeasible, `point` satisfies every constraint exactly.
//
// On kInfeasible, `farkas` holds one nonnegative multiplier per constraint.
// Each constraint is first written as a >= row (<= rows are negated); the
// weighted sum of those rows has coefficient 0 on free variables, <= 0 on
// nonnegative ones, and a strictly positive right-hand side, which no
// admissible point can satisfy.
struct FeasibilityResult {
  Status status;
  std::vector<Rational> point;
  std::vector<Rational> farkas;

  bool feasible() const { return status == Status::kFeasible; }
};

// Phase-one simplex on a dense rational tableau with Bland's rule.
// Deterministic; every certificate is re-verified before returning.
FeasibilityResult solve_feasibility(const LinearProgram& lp);

// Exact check of a certificate against the system it claims to describe.
bool verify_certificate(const LinearProgram& lp, const FeasibilityResult& result);

// Process-wide tally of solve_feasibility calls and certificate checks.
struct AuditCounters {
  std::uint64_t solves = 0;
  std::uint64_t verified = 0;
  std::uint64_t failed = 0;
};
AuditCounters audit_counters();
void reset_audit_counters();

}  // namespace simplegame::lp

#endif  // SIMPLEGAME_RATIONAL_LP_HPP_
