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

// Tail bound and elementary inequalities behind the rejection-probability
// analysis, as executable checks.

#ifndef PIPROUND_BOUNDS_H_
#define PIPROUND_BOUNDS_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pipround/random.h"

namespace pipround {

// Independent summands in [0, beta] with mean at most mu <= alpha * W.
struct ChernoffParams {
  double alpha;
  double width;
  double beta;
  double mu;
};

// (alpha e^(1-alpha) W / (W - beta))^((W - beta) / beta), an upper bound on
// Pr[sum > W - beta]. Evaluated in log space; may exceed 1. Throws
// Error(kPreconditionViolated) unless 0 < alpha < 1, W >= 1,
// 0 < beta <= 1, 0 <= mu <= alpha W (1e-12 slack) and (1 - alpha) W > beta.
double ChernoffTail(const ChernoffParams& params);

// Each predicate evaluates its inequality with a 1e-12 absolute tolerance
// and throws Error(kDomainError) outside the stated domain.

// (1/e^(1/e))^(1/x) <= x for x in (0, 1].
bool LemmaA3Holds(double x);
// x/y >= (1/e^(2/e))^(y/(2x)) for x in (0, 1], y >= 2.
bool LemmaA4Holds(double x, double y);
// eps x / 2 >= (eps/e^(2/e))^(1/x) for eps, x in (0, 1].
bool LemmaA5Holds(double eps, double x);

// Signed slack (larger side minus smaller side) of the same inequalities.
double LemmaA3Slack(double x);
double LemmaA4Slack(double x, double y);
double LemmaA5Slack(double eps, double x);

struct TailEstimate {
  double probability = 0.0;
  double std_error = 0.0;
  int64_t samples = 0;
};

// Monte Carlo estimate of Pr[sum_l coeffs_l * Bernoulli(probs_l) > threshold].
// Sums within 1e-12 of the threshold count as not exceeding it, so lattice
// thresholds (e.g. 1.5 for twenty 0.1 coefficients) are not perturbed by
// accumulation error.
TailEstimate MonteCarloTail(std::span<const double> coeffs,
                            std::span<const double> probs, double threshold,
                            int64_t samples, RandomStream& rng);

// Outcome of evaluating one inequality over a parameter grid, or of the
// Monte Carlo dominance check of the tail bound.
struct GridCheck {
  std::string name;
  int64_t points = 0;
  int64_t violations = 0;
  double min_slack = 0.0;  // smallest slack seen
  double worst_a = 0.0;    // parameters at the smallest slack
  double worst_b = 0.0;
  bool passed() const { return violations == 0; }
};

// The three inequalities on their standard grids:
//   A3: x in {1e-4, 2e-4, ..., 1}
//   A4: x in {1e-3, ..., 1} times y in {2, 2.5, ..., 50}
//   A5: eps, x in {1e-3, ..., 1}
std::vector<GridCheck> CheckLemmaGrids();

// Draws `draws` random parameter sets satisfying the tail-bound
// preconditions, each with a concrete coefficient vector, and counts the
// draws whose Monte Carlo tail estimate exceeds ChernoffTail + 4 SE.
// The slack reported is bound + 4 SE - estimate.
GridCheck CheckChernoffDominance(int draws, int64_t samples, uint64_t seed);

namespace internal {

// Classical multiplicative bound (e^delta / (1+delta)^(1+delta))^(mu/beta)
// on Pr[X >= (1 + delta) mu]; the public bound above is its specialization
// at (1 + delta) mu = W - beta.
double StandardChernoffBound(double mu, double delta, double beta);

}  // namespace internal

}  // namespace pipround

#endif  // PIPROUND_BOUNDS_H_
