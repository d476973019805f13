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

#include "pipround/oracle.h"

#include <algorithm>
#include <numeric>

#include "pipround/error.h"
#include "pipround/lp.h"

namespace pipround {

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const PipInstance& inst, int64_t node_limit)
      : inst_(inst), node_limit_(node_limit), residual_(inst.capacity()) {
    const int n = inst.num_cols();
    const int m = inst.num_rows();
    current_.assign(n, 0);
    for (int j = 0; j < n; ++j) {
      if (inst.column(j).empty()) {
        current_[j] = 1;
        fixed_value_ += inst.objective()[j];
      } else if (inst.objective()[j] > 0.0) {
        order_.push_back(j);
      }
    }
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return inst.objective()[a] > inst.objective()[b];
    });
    position_.assign(n, -1);
    for (size_t k = 0; k < order_.size(); ++k) position_[order_[k]] = static_cast<int>(k);

    // Per-row item lists sorted by profit density, for the fractional bound.
    by_density_.resize(m);
    for (int i = 0; i < m; ++i) {
      for (const MatrixEntry& e : inst.row(i)) {
        if (position_[e.index] >= 0) by_density_[i].push_back(e);
      }
      std::sort(by_density_[i].begin(), by_density_[i].end(),
                [&](const MatrixEntry& a, const MatrixEntry& b) {
                  const double da = inst.objective()[a.index] / a.value;
                  const double db = inst.objective()[b.index] / b.value;
                  if (da != db) return da > db;
                  return a.index < b.index;
                });
    }
    best_ = current_;
    best_value_ = fixed_value_;
  }

  ExactResult Run() {
    Search(0, fixed_value_);
    return {best_value_, best_, nodes_};
  }

 private:
  bool Fits(int j) const {
    for (const MatrixEntry& e : inst_.column(j)) {
      if (e.value > residual_[e.index] + kFeasibilityTolerance) return false;
    }
    return true;
  }

  // Upper bound on the profit obtainable from items order_[k..].
  double Bound(size_t k) const {
    double fitting = 0.0;
    for (size_t q = k; q < order_.size(); ++q) {
      if (Fits(order_[q])) fitting += inst_.objective()[order_[q]];
    }
    double bound = fitting;
    for (int i = 0; i < inst_.num_rows() && bound > 0.0; ++i) {
      // Items outside row i are unconstrained by it: count them fully.
      double row_free = fitting;
      double capacity = std::max(0.0, residual_[i]) + kFeasibilityTolerance;
      double greedy = 0.0;
      for (const MatrixEntry& e : by_density_[i]) {
        if (position_[e.index] < static_cast<int>(k) || !Fits(e.index)) continue;
        const double profit = inst_.objective()[e.index];
        row_free -= profit;
        if (capacity <= 0.0) continue;
        const double take = std::min(1.0, capacity / e.value);
        greedy += take * profit;
        capacity -= take * e.value;
      }
      bound = std::min(bound, row_free + greedy);
    }
    return bound;
  }

  void Search(size_t k, double value) {
    if (++nodes_ > node_limit_) {
      throw Error(ErrorCode::kNodeLimit,
                  "branch and bound exceeded " + std::to_string(node_limit_) +
                      " nodes");
    }
    if (value > best_value_) {
      best_value_ = value;
      best_ = current_;
    }
    if (k == order_.size()) return;
    if (value + Bound(k) <= best_value_ + 1e-12) return;
    const int j = order_[k];
    if (Fits(j)) {
      for (const MatrixEntry& e : inst_.column(j)) residual_[e.index] -= e.value;
      current_[j] = 1;
      Search(k + 1, value + inst_.objective()[j]);
      current_[j] = 0;
      for (const MatrixEntry& e : inst_.column(j)) residual_[e.index] += e.value;
    }
    Search(k + 1, value);
  }

  const PipInstance& inst_;
  const int64_t node_limit_;
  std::vector<double> residual_;
  std::vector<uint8_t> current_;
  std::vector<uint8_t> best_;
  std::vector<int> order_;
  std::vector<int> position_;
  std::vector<std::vector<MatrixEntry>> by_density_;
  double fixed_value_ = 0.0;
  double best_value_ = 0.0;
  int64_t nodes_ = 0;
};

}  // namespace

ExactResult BruteForceOpt(const PipInstance& instance, int64_t node_limit) {
  if (instance.num_cols() > kMaxOracleColumns) {
    throw Error(ErrorCode::kTooLarge,
                "exact oracle limited to n <= 30, got n = " +
                    std::to_string(instance.num_cols()));
  }
  ExactResult result = BranchAndBound(instance, node_limit).Run();
  result.value =
      instance.ObjectiveValue(std::span<const uint8_t>(result.argmax));
  return result;
}

ApproxReport ApproxRatio(const NormalizedInstance& instance,
                         const RegimeConfig& config, int64_t trials,
                         uint64_t seed, const RoundingOptions& options) {
  const FractionalSolution lp = SolveLp(instance);
  const ExactResult exact = BruteForceOpt(instance.base);
  const RoundAndAlterResult rounds =
      RoundAndAlter(instance, lp, config, trials, seed, options);
  ApproxReport report;
  report.mean_value = rounds.mean_value;
  report.std_error = rounds.std_error;
  report.ip_opt = exact.value;
  report.lp_opt = lp.objective;
  if (report.ip_opt > 0.0) report.ratio_vs_ip = report.mean_value / report.ip_opt;
  if (report.lp_opt > 0.0) report.ratio_vs_lp = report.mean_value / report.lp_opt;
  return report;
}

}  // namespace pipround
