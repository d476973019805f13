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

// Experiment harness: conditional rejection-probability estimation and
// regime sweeps with CSV reports.

#ifndef PIPROUND_HARNESS_H_
#define PIPROUND_HARNESS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pipround/instance.h"
#include "pipround/lp.h"
#include "pipround/regimes.h"
#include "pipround/rounding.h"

namespace pipround {

// Two-sided 99% normal quantile.
inline constexpr double kWilsonZ99 = 2.5758293035489004;

// Half-width of the Wilson score interval for `successes` out of `n`.
double WilsonHalfWidth(int64_t successes, int64_t n, double z = kWilsonZ99);

struct PairRejection {
  int row = 0;
  int col = 0;
  double coefficient = 0.0;
  bool big = false;  // small-width regime: A_ij > eps/2
  int64_t conditioned_samples = 0;
  int64_t rejections = 0;
  double estimate = 0.0;
  double wilson_half_width = 0.0;
  // A_ij / (2 D1), or e eps A_ij / D1 for LargeW.
  double analytic_bound = 0.0;
};

struct ItemRejection {
  int col = 0;
  double sum_estimate = 0.0;
  double sum_half_width = 0.0;  // sum of the per-pair half-widths
  double sum_bound = 0.0;       // sum of the per-pair bounds, <= gamma
};

struct RejectionReport {
  AlterationMode mode = AlterationMode::kIsolated;
  RegimeConfig config;
  int64_t trials = 0;
  std::vector<PairRejection> pairs;  // row-major over (i, j), j in supp(x)
  std::vector<ItemRejection> items;  // ascending j over supp(x)
  // Set when some pair has fewer than 100 conditioned samples.
  bool low_sample_warning = false;

  // Largest estimate - (analytic_bound + k * wilson_half_width) over pairs;
  // <= 0 means every pair is within its bound.
  double MaxPairExcess(double k) const;
  // Largest sum_estimate - (gamma + k * sum_half_width) over items.
  double MaxItemExcess(double k) const;
  double MaxItemSum() const;
};

// Estimates Pr[E_ij | X_j = 1] for every pair with A_ij > 0 and x_j > 0.
// Conditioning is done by forcing x'_j = 1 while the other coordinates keep
// their unconditioned draws (independence makes this the conditional law),
// so each trial is one conditioned sample for every item.
//
// Isolated mode evaluates each row against the pristine x' exactly as the
// regime's alteration would. Cascaded mode runs the full cascaded
// alteration once per (trial, item) and attributes a rejection to the first
// rejecting row.
//
// The unsorted baseline is not supported. Throws Error(kInvalidArgument)
// when trials < 1.
RejectionReport EstimateRejections(const NormalizedInstance& instance,
                                   const FractionalSolution& lp,
                                   const RegimeConfig& config, int64_t trials,
                                   AlterationMode mode, uint64_t seed,
                                   int threads = 1);

// --- Sweeps -----------------------------------------------------------------

// One instance source of a sweep. `kind` is one of: random, sparse_column,
// mixed, knapsack, mis, file. Unused fields are ignored by a kind.
struct InstanceSpec {
  std::string name;
  std::string kind = "random";
  int n = 20;
  int m = 5;
  double width = 2.0;
  double density = 0.5;
  double eps = 0.5;         // mixed
  int column_nnz = 2;       // sparse_column
  std::string profile = "uniform";  // knapsack
  std::string graph = "complete";   // mis: complete, path, random
  int vertices = 6;
  double edge_probability = 0.5;
  std::optional<uint64_t> seed;  // derived from the master seed when absent
  std::string path;              // file
};

struct SweepSpec {
  std::vector<InstanceSpec> instances;
  std::vector<std::string> regimes{"auto"};  // auto, weak, strong, largew, smallwidth
  std::vector<int64_t> trials{1000};
  std::optional<double> eps;  // LargeW eps and auto hint
  // Trials for the isolated rejection estimate; 0 disables it, absent means
  // the cell's trial count.
  std::optional<int64_t> rejection_trials;
  int oracle_max_n = 20;
  int64_t oracle_node_limit = 2'000'000;
  bool force_heuristic = false;
};

// Parses a sweep spec document. Relative "file" paths resolve against
// `base_dir`. Throws Error(kParseError).
SweepSpec ParseSweepSpec(std::string_view json_text,
                         const std::string& base_dir = ".");

struct SweepOptions {
  uint64_t seed = 0;
  bool deterministic = false;  // no timestamp line, wall_ms written as 0
  int threads = 1;
};

// Column order of the sweep CSV.
const std::vector<std::string>& SweepColumns();

// Runs every (instance, regime, trials) cell, instance-major, and writes one
// CSV row per cell in cell order, flushing each row as soon as all earlier
// rows are done. A failing cell still gets a row with its `error` column
// set. Returns the number of failed cells.
int RunSweep(const SweepSpec& spec, const SweepOptions& options,
             std::ostream& out);

}  // namespace pipround

#endif  // PIPROUND_HARNESS_H_
