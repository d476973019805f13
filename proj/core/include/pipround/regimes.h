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

// Width regimes and their scaling factors. All instances are assumed
// normalized (b_i = W, entries in [0,1]).
//
//   WeakW2      W >= 2          alpha = 1 / (c1 D1)
//   StrongW2    W >= 2          alpha = 1 / (c2 (1 + D1/W)^(1/(W-1)))
//   LargeW      W >= (2/eps^2) ln(D1/eps) + 1,  0 < eps < 1/e
//                               alpha = 1 - eps
//   SmallWidth  W = 1 + eps,  0 < eps <= 1
//                               alpha = eps^2 / (c3 D1)
//
// with c1 = 4 e^(1+1/e), c2 = 4 e^(1+2/e), c3 = 8 e^(1+2/e) and D1 the l1
// column sparsity. WeakW2, StrongW2 and LargeW repair constraints with the
// sorted-prefix alteration, SmallWidth with the small/big split.

#ifndef PIPROUND_REGIMES_H_
#define PIPROUND_REGIMES_H_

#include <optional>
#include <string>
#include <string_view>

#include "pipround/instance.h"

namespace pipround {

enum class Regime { kWeakW2, kStrongW2, kLargeW, kSmallWidth };

std::string_view RegimeName(Regime regime);  // "weak", "strong", ...
// Accepts the names produced by RegimeName. Throws Error(kInvalidArgument).
Regime ParseRegime(std::string_view name);

struct RegimeConstants {
  double c1;
  double c2;
  double c3;
};

// Evaluated once from the closed forms.
const RegimeConstants& Constants();

// Default accuracy target for automatic LargeW selection.
inline constexpr double kDefaultEpsHint = 0.25;

struct RegimeConfig {
  Regime regime = Regime::kStrongW2;
  double alpha = 0.0;
  // Meaningful for LargeW and SmallWidth only; 0 otherwise.
  double eps = 0.0;
  // Bound on every item's summed rejection probability that the analysis of
  // the regime guarantees: 1/2 for the D1-scaled regimes, e * eps for LargeW.
  // Reported, never used by the algorithms.
  double gamma = 0.5;
  RegimeConstants constants{};
  // Set when the config was built outside the regime's width requirement
  // (W = 1 with the heuristic flag, or an explicit alpha override); the
  // approximation guarantee does not apply.
  bool heuristic = false;
};

double AlphaWeak(double delta1);
double AlphaStrong(double delta1, double width);
// Throws Error(kEpsOutOfRange) unless 0 < eps < 1/e.
double AlphaLargeW(double eps);
// Throws Error(kEpsOutOfRange) unless 0 < eps <= 1.
double AlphaSmallWidth(double eps, double delta1);
double RequiredWidthLargeW(double eps, double delta1);

// Picks the regime from the instance statistics:
//   eps_hint given and W >= RequiredWidthLargeW(eps_hint, D1) -> LargeW
//   W >= 2                                                    -> StrongW2
//   W > 1                                                     -> SmallWidth
// Throws Error(kWidthOne) at W = 1, where the problem is as hard as maximum
// independent set and no ratio depending only on D1 exists.
RegimeConfig SelectRegime(const NormalizedInstance& instance,
                          std::optional<double> eps_hint = std::nullopt);

// Builds the config for an explicitly requested regime, checking the width
// requirement (Error(kRegimeMismatch)). `eps` is used by LargeW (default
// kDefaultEpsHint) and ignored by SmallWidth, whose eps is W - 1.
RegimeConfig ConfigFor(Regime regime, const NormalizedInstance& instance,
                       std::optional<double> eps = std::nullopt);

// Heuristic config for W = 1 instances: sorted alteration with the WeakW2
// scaling factor, flagged heuristic.
RegimeConfig HeuristicConfig(const NormalizedInstance& instance);

// Copy of `config` with alpha replaced; marks it heuristic. Used by stress
// tests that push the alteration beyond the analyzed scaling.
RegimeConfig WithAlpha(RegimeConfig config, double alpha);

// True when the config's width requirement holds for `instance`.
bool IsConsistent(const RegimeConfig& config,
                  const NormalizedInstance& instance);

}  // namespace pipround

#endif  // PIPROUND_REGIMES_H_
