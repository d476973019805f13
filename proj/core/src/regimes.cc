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

#include "pipround/regimes.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "pipround/error.h"

namespace pipround {

namespace {

constexpr double kE = std::numbers::e;
constexpr double kWidthTolerance = 1e-9;

bool WidthIsOne(double width) { return width - 1.0 <= 1e-12; }

std::string Describe(const NormalizedInstance& inst) {
  std::ostringstream os;
  os << "W=" << inst.width << " delta1=" << inst.delta1;
  return os.str();
}

}  // namespace

std::string_view RegimeName(Regime regime) {
  switch (regime) {
    case Regime::kWeakW2:
      return "weak";
    case Regime::kStrongW2:
      return "strong";
    case Regime::kLargeW:
      return "largew";
    case Regime::kSmallWidth:
      return "smallwidth";
  }
  return "?";
}

Regime ParseRegime(std::string_view name) {
  if (name == "weak") return Regime::kWeakW2;
  if (name == "strong") return Regime::kStrongW2;
  if (name == "largew") return Regime::kLargeW;
  if (name == "smallwidth") return Regime::kSmallWidth;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown regime \"" + std::string(name) + "\"");
}

const RegimeConstants& Constants() {
  static const RegimeConstants constants{
      4.0 * std::exp(1.0 + 1.0 / kE),
      4.0 * std::exp(1.0 + 2.0 / kE),
      8.0 * std::exp(1.0 + 2.0 / kE),
  };
  return constants;
}

double AlphaWeak(double delta1) { return 1.0 / (Constants().c1 * delta1); }

double AlphaStrong(double delta1, double width) {
  return 1.0 /
         (Constants().c2 * std::pow(1.0 + delta1 / width, 1.0 / (width - 1.0)));
}

double AlphaLargeW(double eps) {
  if (!(eps > 0.0 && eps < 1.0 / kE)) {
    throw Error(ErrorCode::kEpsOutOfRange,
                "LargeW needs 0 < eps < 1/e, got " + std::to_string(eps));
  }
  return 1.0 - eps;
}

double AlphaSmallWidth(double eps, double delta1) {
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw Error(ErrorCode::kEpsOutOfRange,
                "SmallWidth needs 0 < eps <= 1, got " + std::to_string(eps));
  }
  return eps * eps / (Constants().c3 * delta1);
}

double RequiredWidthLargeW(double eps, double delta1) {
  return 2.0 / (eps * eps) * std::log(delta1 / eps) + 1.0;
}

RegimeConfig ConfigFor(Regime regime, const NormalizedInstance& inst,
                       std::optional<double> eps) {
  RegimeConfig cfg;
  cfg.regime = regime;
  cfg.constants = Constants();
  const double w = inst.width;
  switch (regime) {
    case Regime::kWeakW2:
    case Regime::kStrongW2:
      if (w < 2.0 - kWidthTolerance) {
        throw Error(ErrorCode::kRegimeMismatch,
                    std::string(RegimeName(regime)) + " regime needs W >= 2 (" +
                        Describe(inst) + ")");
      }
      cfg.alpha = regime == Regime::kWeakW2
                      ? AlphaWeak(inst.delta1)
                      : AlphaStrong(inst.delta1, std::max(w, 2.0));
      cfg.gamma = 0.5;
      break;
    case Regime::kLargeW: {
      const double e = eps.value_or(kDefaultEpsHint);
      cfg.alpha = AlphaLargeW(e);
      cfg.eps = e;
      const double required = RequiredWidthLargeW(e, inst.delta1);
      if (w < required - kWidthTolerance) {
        throw Error(ErrorCode::kRegimeMismatch,
                    "largew regime with eps=" + std::to_string(e) +
                        " needs W >= " + std::to_string(required) + " (" +
                        Describe(inst) + ")");
      }
      cfg.gamma = kE * e;
      break;
    }
    case Regime::kSmallWidth: {
      if (WidthIsOne(w) || w > 2.0 + kWidthTolerance) {
        throw Error(ErrorCode::kRegimeMismatch,
                    "smallwidth regime needs 1 < W <= 2 (" + Describe(inst) +
                        ")");
      }
      const double e = std::min(w - 1.0, 1.0);
      cfg.alpha = AlphaSmallWidth(e, inst.delta1);
      cfg.eps = e;
      cfg.gamma = 0.5;
      break;
    }
  }
  return cfg;
}

RegimeConfig SelectRegime(const NormalizedInstance& inst,
                          std::optional<double> eps_hint) {
  const double w = inst.width;
  if (eps_hint && *eps_hint > 0.0 && *eps_hint < 1.0 / kE &&
      w >= RequiredWidthLargeW(*eps_hint, inst.delta1)) {
    return ConfigFor(Regime::kLargeW, inst, eps_hint);
  }
  if (w >= 2.0) return ConfigFor(Regime::kStrongW2, inst);
  if (!WidthIsOne(w)) return ConfigFor(Regime::kSmallWidth, inst);
  throw Error(ErrorCode::kWidthOne,
              "width W = 1: packing integer programs at width one admit an "
              "approximation preserving reduction from maximum independent "
              "set (even with delta1 <= 2), so no delta1-based guarantee "
              "exists; pass --force-heuristic to round anyway");
}

RegimeConfig HeuristicConfig(const NormalizedInstance& inst) {
  RegimeConfig cfg;
  cfg.regime = Regime::kWeakW2;
  cfg.constants = Constants();
  cfg.alpha = AlphaWeak(std::max(inst.delta1, 1.0));
  cfg.gamma = 0.5;
  cfg.heuristic = true;
  return cfg;
}

RegimeConfig WithAlpha(RegimeConfig config, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must lie in (0, 1]");
  }
  config.alpha = alpha;
  config.heuristic = true;
  return config;
}

bool IsConsistent(const RegimeConfig& cfg, const NormalizedInstance& inst) {
  const double w = inst.width;
  switch (cfg.regime) {
    case Regime::kWeakW2:
    case Regime::kStrongW2:
      return w >= 2.0 - kWidthTolerance;
    case Regime::kLargeW:
      return cfg.eps > 0.0 && cfg.eps < 1.0 / kE &&
             w >= RequiredWidthLargeW(cfg.eps, inst.delta1) - kWidthTolerance;
    case Regime::kSmallWidth:
      return cfg.eps > 0.0 && cfg.eps <= 1.0 &&
             std::abs(w - (1.0 + cfg.eps)) <= kWidthTolerance;
  }
  return false;
}

}  // namespace pipround
