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

// Randomized rounding with alteration.
//
// Each trial scales the LP optimum x by alpha, sets x'_j = 1 independently
// with probability alpha * x_j, and then repairs the constraints one at a
// time (ascending row index) by zeroing a subset of the rounded items:
//
//   sorted prefix  Rounded items of row i are taken in increasing order of
//                  A_ij (ties by column index); the longest prefix whose
//                  coefficient sum is <= W is kept, the rest are rejected.
//   small width    For W = 1 + eps: items with A_ij <= eps/2 are small and
//                  are packed the same way into capacity eps; among the big
//                  rounded items only the one with the smallest coefficient
//                  is kept, in the remaining capacity 1.
//
// In cascaded mode a row sees the items already zeroed by earlier rows; in
// isolated mode every row is evaluated against the pristine x' and x'' is x'
// minus the union of all rejections. Both produce feasible x''.

#ifndef PIPROUND_ROUNDING_H_
#define PIPROUND_ROUNDING_H_

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "pipround/instance.h"
#include "pipround/lp.h"
#include "pipround/random.h"
#include "pipround/regimes.h"

namespace pipround {

enum class AlterationMode { kCascaded, kIsolated };
enum class AlterationScheme { kSortedPrefix, kSmallWidth, kUnsortedBaseline };

struct Rejection {
  int row;
  int col;
  bool operator==(const Rejection&) const = default;
};

struct RoundingOutcome {
  std::vector<uint8_t> x_prime;
  std::vector<uint8_t> x_double_prime;
  double value = 0.0;
  // Cascaded mode records only the first rejecting row of an item; isolated
  // mode records every row that rejects it.
  std::vector<Rejection> rejections;
  uint64_t seed = 0;
  uint64_t trial = 0;
};

// Draws exactly x.size() values from `rng`, in index order.
std::vector<uint8_t> IndependentRound(std::span<const double> x, double alpha,
                                      RandomStream& rng);

RoundingOutcome AlterBySorting(const NormalizedInstance& instance,
                               std::span<const uint8_t> x_prime,
                               AlterationMode mode = AlterationMode::kCascaded);

// Throws Error(kEpsOutOfRange) unless 0 < eps <= 1 and
// Error(kRegimeMismatch) unless W == 1 + eps within 1e-9.
RoundingOutcome AlterSmallWidth(const NormalizedInstance& instance, double eps,
                                std::span<const uint8_t> x_prime,
                                AlterationMode mode = AlterationMode::kCascaded);

// Baseline for comparison only: prefix in column-index order, no sorting.
RoundingOutcome AlterInIndexOrder(
    const NormalizedInstance& instance, std::span<const uint8_t> x_prime,
    AlterationMode mode = AlterationMode::kCascaded);

AlterationScheme SchemeFor(const RegimeConfig& config);

RoundingOutcome Alter(const NormalizedInstance& instance,
                      const RegimeConfig& config,
                      std::span<const uint8_t> x_prime, AlterationMode mode,
                      bool unsorted_baseline = false);

struct TrialStats {
  uint64_t trial = 0;
  uint64_t seed = 0;
  double value = 0.0;
  int num_rounded = 0;
  int num_rejected = 0;
  bool feasible = true;
};

struct RoundingOptions {
  AlterationMode mode = AlterationMode::kCascaded;
  bool unsorted_baseline = false;
  int threads = 1;
};

struct RoundAndAlterResult {
  RoundingOutcome best;  // max value; ties go to the lowest trial index
  std::vector<TrialStats> trials;
  double mean_value = 0.0;
  double std_error = 0.0;  // of mean_value
  int64_t infeasible_trials = 0;
  RegimeConfig config;
};

// Runs `trials` independent trials; trial t uses RandomStream::ForTrial(seed,
// t), so the result does not depend on `options.threads`. Throws
// Error(kInvalidArgument) when trials < 1 and Error(kRegimeMismatch) when the
// config is not consistent with the instance (heuristic configs skip the
// check).
RoundAndAlterResult RoundAndAlter(const NormalizedInstance& instance,
                                  const FractionalSolution& lp,
                                  const RegimeConfig& config, int64_t trials,
                                  uint64_t seed,
                                  const RoundingOptions& options = {});

// One trial: rounding, empty-column pinning and alteration.
RoundingOutcome RoundOnce(const NormalizedInstance& instance,
                          std::span<const double> x,
                          const RegimeConfig& config, uint64_t seed,
                          uint64_t trial, const RoundingOptions& options = {});

// CSV with header "trial,seed,value,numRounded,numRejected,feasible".
void WriteTrialCsv(std::ostream& out, std::span<const TrialStats> trials);

}  // namespace pipround

#endif  // PIPROUND_ROUNDING_H_
