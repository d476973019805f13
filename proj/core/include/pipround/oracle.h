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

#ifndef PIPROUND_ORACLE_H_
#define PIPROUND_ORACLE_H_

#include <cstdint>
#include <vector>

#include "pipround/instance.h"
#include "pipround/regimes.h"
#include "pipround/rounding.h"

namespace pipround {

inline constexpr int kMaxOracleColumns = 30;
inline constexpr int64_t kDefaultNodeLimit = 50'000'000;

struct ExactResult {
  double value = 0.0;
  std::vector<uint8_t> argmax;
  int64_t nodes_explored = 0;
};

// Exact 0/1 optimum by depth-first branch and bound. Items are branched in
// order of decreasing c_j (include first); a node is pruned when its value
// plus a fractional-greedy bound on the remaining items cannot beat the
// incumbent. Empty columns are fixed to 1 and zero-profit items to 0.
//
// Throws Error(kTooLarge) if n > 30 and Error(kNodeLimit) once more than
// `node_limit` nodes have been visited.
ExactResult BruteForceOpt(const PipInstance& instance,
                          int64_t node_limit = kDefaultNodeLimit);

struct ApproxReport {
  double mean_value = 0.0;
  double std_error = 0.0;
  double ip_opt = 0.0;
  double lp_opt = 0.0;
  double ratio_vs_ip = 1.0;  // mean / ip_opt (1 when ip_opt == 0)
  double ratio_vs_lp = 1.0;  // mean / lp_opt (1 when lp_opt == 0)
};

// Monte Carlo mean of c.x'' over `trials` round-and-alter trials, against
// the exact and the LP optimum.
ApproxReport ApproxRatio(const NormalizedInstance& instance,
                         const RegimeConfig& config, int64_t trials,
                         uint64_t seed, const RoundingOptions& options = {});

}  // namespace pipround

#endif  // PIPROUND_ORACLE_H_
