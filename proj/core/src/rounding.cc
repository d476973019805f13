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

#include "pipround/rounding.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <thread>

#include "pipround/error.h"

namespace pipround {

namespace {

struct RowItem {
  int row;
  double coef;
  int col;
};

// Positive entries of every rounded column, grouped by row and, within a
// row, ordered by (coefficient, column) or by column alone.
std::vector<RowItem> GatherRoundedEntries(const PipInstance& inst,
                                          std::span<const uint8_t> x_prime,
                                          bool by_coefficient) {
  std::vector<RowItem> items;
  for (int j = 0; j < inst.num_cols(); ++j) {
    if (!x_prime[j]) continue;
    for (const MatrixEntry& e : inst.column(j)) {
      if (e.value > 0.0) items.push_back({e.index, e.value, j});
    }
  }
  if (by_coefficient) {
    std::sort(items.begin(), items.end(), [](const RowItem& a, const RowItem& b) {
      if (a.row != b.row) return a.row < b.row;
      if (a.coef != b.coef) return a.coef < b.coef;
      return a.col < b.col;
    });
  } else {
    std::sort(items.begin(), items.end(), [](const RowItem& a, const RowItem& b) {
      if (a.row != b.row) return a.row < b.row;
      return a.col < b.col;
    });
  }
  return items;
}

// make_policy() builds a fresh per-row policy; the policy sees each live item
// of the row in order and returns false to reject it.
template <typename RowPolicy>
RoundingOutcome RunAlteration(const NormalizedInstance& inst,
                              std::span<const uint8_t> x_prime,
                              AlterationMode mode, bool by_coefficient,
                              RowPolicy make_policy) {
  if (static_cast<int>(x_prime.size()) != inst.num_cols()) {
    throw Error(ErrorCode::kInvalidArgument, "x' length != num_cols");
  }
  RoundingOutcome out;
  out.x_prime.assign(x_prime.begin(), x_prime.end());
  out.x_double_prime = out.x_prime;
  const std::vector<RowItem> items =
      GatherRoundedEntries(inst.base, x_prime, by_coefficient);
  const bool cascaded = mode == AlterationMode::kCascaded;
  std::vector<uint8_t>& alive = out.x_double_prime;
  size_t begin = 0;
  while (begin < items.size()) {
    size_t end = begin;
    while (end < items.size() && items[end].row == items[begin].row) ++end;
    auto policy = make_policy();
    for (size_t k = begin; k < end; ++k) {
      const RowItem& item = items[k];
      if (cascaded && !alive[item.col]) continue;
      if (!policy(item.coef)) {
        out.rejections.push_back({item.row, item.col});
        if (cascaded) alive[item.col] = 0;
      }
    }
    begin = end;
  }
  if (!cascaded) {
    for (const Rejection& r : out.rejections) alive[r.col] = 0;
  }
  out.value = inst.base.ObjectiveValue(std::span<const uint8_t>(alive));
  return out;
}

// Longest prefix with sum <= capacity; everything after the first overflow
// is rejected.
class PrefixPolicy {
 public:
  explicit PrefixPolicy(double capacity) : capacity_(capacity) {}
  bool operator()(double coef) {
    if (overflowed_) return false;
    if (sum_ + coef <= capacity_ + kFeasibilityTolerance) {
      sum_ += coef;
      return true;
    }
    overflowed_ = true;
    return false;
  }

 private:
  double capacity_;
  double sum_ = 0.0;
  bool overflowed_ = false;
};

// Items arrive sorted by coefficient, so all small items precede all big
// ones and the first live big item has the smallest coefficient.
class SmallBigPolicy {
 public:
  explicit SmallBigPolicy(double eps) : eps_(eps), small_(eps) {}
  bool operator()(double coef) {
    if (coef <= eps_ / 2.0) return small_(coef);
    if (big_taken_) return false;
    big_taken_ = true;
    return true;
  }

 private:
  double eps_;
  PrefixPolicy small_;
  bool big_taken_ = false;
};

void CheckSmallWidth(const NormalizedInstance& inst, double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw Error(ErrorCode::kEpsOutOfRange,
                "small-width alteration needs 0 < eps <= 1");
  }
  if (std::abs(inst.width - (1.0 + eps)) > 1e-9) {
    throw Error(ErrorCode::kRegimeMismatch,
                "small-width alteration needs W = 1 + eps; W=" +
                    std::to_string(inst.width) +
                    " eps=" + std::to_string(eps));
  }
}

}  // namespace

std::vector<uint8_t> IndependentRound(std::span<const double> x, double alpha,
                                      RandomStream& rng) {
  std::vector<uint8_t> out(x.size());
  for (size_t j = 0; j < x.size(); ++j) {
    out[j] = rng.Uniform() < alpha * x[j] ? 1 : 0;
  }
  return out;
}

RoundingOutcome AlterBySorting(const NormalizedInstance& inst,
                               std::span<const uint8_t> x_prime,
                               AlterationMode mode) {
  return RunAlteration(inst, x_prime, mode, /*by_coefficient=*/true,
                       [&] { return PrefixPolicy(inst.width); });
}

RoundingOutcome AlterSmallWidth(const NormalizedInstance& inst, double eps,
                                std::span<const uint8_t> x_prime,
                                AlterationMode mode) {
  CheckSmallWidth(inst, eps);
  return RunAlteration(inst, x_prime, mode, /*by_coefficient=*/true,
                       [&] { return SmallBigPolicy(eps); });
}

RoundingOutcome AlterInIndexOrder(const NormalizedInstance& inst,
                                  std::span<const uint8_t> x_prime,
                                  AlterationMode mode) {
  return RunAlteration(inst, x_prime, mode, /*by_coefficient=*/false,
                       [&] { return PrefixPolicy(inst.width); });
}

AlterationScheme SchemeFor(const RegimeConfig& config) {
  return config.regime == Regime::kSmallWidth ? AlterationScheme::kSmallWidth
                                              : AlterationScheme::kSortedPrefix;
}

RoundingOutcome Alter(const NormalizedInstance& inst,
                      const RegimeConfig& config,
                      std::span<const uint8_t> x_prime, AlterationMode mode,
                      bool unsorted_baseline) {
  if (unsorted_baseline) return AlterInIndexOrder(inst, x_prime, mode);
  switch (SchemeFor(config)) {
    case AlterationScheme::kSmallWidth:
      return AlterSmallWidth(inst, config.eps, x_prime, mode);
    case AlterationScheme::kSortedPrefix:
    case AlterationScheme::kUnsortedBaseline:
      break;
  }
  return AlterBySorting(inst, x_prime, mode);
}

RoundingOutcome RoundOnce(const NormalizedInstance& inst,
                          std::span<const double> x,
                          const RegimeConfig& config, uint64_t seed,
                          uint64_t trial, const RoundingOptions& options) {
  RandomStream rng = RandomStream::ForTrial(seed, trial);
  std::vector<uint8_t> x_prime = IndependentRound(x, config.alpha, rng);
  for (int j = 0; j < inst.num_cols(); ++j) {
    if (inst.base.column(j).empty()) x_prime[j] = 1;
  }
  RoundingOutcome out =
      Alter(inst, config, x_prime, options.mode, options.unsorted_baseline);
  out.seed = seed;
  out.trial = trial;
  return out;
}

RoundAndAlterResult RoundAndAlter(const NormalizedInstance& inst,
                                  const FractionalSolution& lp,
                                  const RegimeConfig& config, int64_t trials,
                                  uint64_t seed,
                                  const RoundingOptions& options) {
  if (trials < 1) {
    throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
  }
  if (!config.heuristic && !IsConsistent(config, inst)) {
    throw Error(ErrorCode::kRegimeMismatch,
                std::string("regime ") + std::string(RegimeName(config.regime)) +
                    " does not match the instance width " +
                    std::to_string(inst.width));
  }
  if (static_cast<int>(lp.x.size()) != inst.num_cols()) {
    throw Error(ErrorCode::kInvalidArgument, "LP solution length != num_cols");
  }
  RoundAndAlterResult result;
  result.config = config;
  result.trials.resize(trials);

  const int threads = static_cast<int>(
      std::clamp<int64_t>(options.threads, 1, std::min<int64_t>(trials, 256)));
  std::vector<RoundingOutcome> chunk_best(threads);
  std::vector<uint8_t> chunk_has_best(threads, 0);
  auto run_chunk = [&](int chunk) {
    const int64_t lo = trials * chunk / threads;
    const int64_t hi = trials * (chunk + 1) / threads;
    for (int64_t t = lo; t < hi; ++t) {
      RoundingOutcome outcome =
          RoundOnce(inst, lp.x, config, seed, static_cast<uint64_t>(t), options);
      TrialStats& s = result.trials[t];
      s.trial = static_cast<uint64_t>(t);
      s.seed = seed;
      s.value = outcome.value;
      s.num_rounded = static_cast<int>(
          std::count(outcome.x_prime.begin(), outcome.x_prime.end(), 1));
      s.num_rejected = static_cast<int>(s.num_rounded -
                                        std::count(outcome.x_double_prime.begin(),
                                                   outcome.x_double_prime.end(), 1));
      s.feasible = inst.base.IsFeasible(
          std::span<const uint8_t>(outcome.x_double_prime));
      if (!chunk_has_best[chunk] || outcome.value > chunk_best[chunk].value) {
        chunk_best[chunk] = std::move(outcome);
        chunk_has_best[chunk] = 1;
      }
    }
  };
  if (threads == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int c = 0; c < threads; ++c) pool.emplace_back(run_chunk, c);
    for (std::thread& t : pool) t.join();
  }
  // Chunks cover increasing trial ranges, so a strict > keeps the lowest
  // trial index among equal values.
  for (int c = 0; c < threads; ++c) {
    if (!chunk_has_best[c]) continue;
    if (c == 0 || chunk_best[c].value > result.best.value) {
      result.best = std::move(chunk_best[c]);
    }
  }

  double mean = 0.0;
  double m2 = 0.0;
  int64_t k = 0;
  for (const TrialStats& s : result.trials) {
    ++k;
    const double delta = s.value - mean;
    mean += delta / static_cast<double>(k);
    m2 += delta * (s.value - mean);
    if (!s.feasible) ++result.infeasible_trials;
  }
  result.mean_value = mean;
  result.std_error =
      trials > 1 ? std::sqrt(m2 / static_cast<double>(trials - 1) /
                             static_cast<double>(trials))
                 : 0.0;
  return result;
}

void WriteTrialCsv(std::ostream& out, std::span<const TrialStats> trials) {
  out << "trial,seed,value,numRounded,numRejected,feasible\n";
  const auto old_precision = out.precision(17);
  for (const TrialStats& s : trials) {
    out << s.trial << ',' << s.seed << ',' << s.value << ',' << s.num_rounded
        << ',' << s.num_rejected << ',' << (s.feasible ? 1 : 0) << '\n';
  }
  out.precision(old_precision);
}

}  // namespace pipround
