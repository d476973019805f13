// Copyright 2026 The pipround Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// LP relaxation max{c.x : A x <= b, 0 <= x <= 1} solved by a bounded-variable
// primal simplex (revised form, dense basis inverse). The upper bounds on the
// structural variables are handled implicitly: nonbasic variables sit at
// either bound and a bound flip is a legal step that does not change the
// basis. Slack basis x = 0 is always feasible because b >= 0, so there is no
// phase one.
//
// Pricing is Dantzig (largest reduced cost) for the first 10 (n + m)
// iterations and Bland (smallest eligible index) afterwards, which rules out
// cycling. Ratio-test ties go to the smallest variable index.

#ifndef PIPROUND_LP_H_
#define PIPROUND_LP_H_

#include <cstdint>
#include <ostream>
#include <vector>

#include "pipround/instance.h"

namespace pipround {

enum class LpStatus { kOptimal, kInfeasible, kIterationLimit };

enum class VariableState : uint8_t { kBasic, kAtLower, kAtUpper };

struct FractionalSolution {
  std::vector<double> x;
  double objective = 0.0;
  LpStatus status = LpStatus::kOptimal;

  // Dual information from the final basis. row_duals[i] >= 0 prices row i;
  // reduced_costs[j] = c_j - A_j . y.
  std::vector<double> row_duals;
  std::vector<double> reduced_costs;
  double dual_objective = 0.0;  // b.y + sum_j max(0, reduced_costs[j])

  // Final basis: basic_variables[r] is the variable basic in row r (indices
  // >= n are slacks), states has one entry per structural and slack.
  std::vector<int> basic_variables;
  std::vector<VariableState> states;
  int64_t iterations = 0;
  int64_t bland_iterations = 0;
};

struct LpOptions {
  int64_t max_iterations = 1'000'000;
  double pivot_tolerance = 1e-10;
  double optimality_tolerance = 1e-9;
  // Recompute the basis inverse from scratch after this many updates.
  int refactor_interval = 64;
};

// Solves the relaxation of `instance` (any PipInstance works; the normalized
// overload is a convenience). Throws Error(kIterationLimit) when
// max_iterations is exhausted.
FractionalSolution SolveLp(const PipInstance& instance,
                           const LpOptions& options = {});
FractionalSolution SolveLp(const NormalizedInstance& instance,
                           const LpOptions& options = {});

// LP objective divided by max(ip_opt, 1).
double LpObjectiveGap(const FractionalSolution& lp, double ip_opt);

// Human-readable dump of the final basis and primal/dual values.
void WriteBasis(std::ostream& out, const PipInstance& instance,
                const FractionalSolution& solution);

}  // namespace pipround

#endif  // PIPROUND_LP_H_
