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

#include "pipround/bounds.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pipround/error.h"

namespace pipround {

namespace {

constexpr double kE = std::numbers::e;
constexpr double kInequalityTolerance = 1e-12;
constexpr double kThresholdGuard = 1e-12;

void RequireUnitInterval(double v, const char* name) {
  if (!(v > 0.0 && v <= 1.0)) {
    throw Error(ErrorCode::kDomainError,
                std::string(name) + " must lie in (0, 1], got " +
                    std::to_string(v));
  }
}

}  // namespace

namespace internal {

double StandardChernoffBound(double mu, double delta, double beta) {
  if (!(mu > 0.0) || !(delta > 0.0) || !(beta > 0.0 && beta <= 1.0)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "standard Chernoff bound needs mu > 0, delta > 0, beta in (0,1]");
  }
  return std::exp(mu / beta * (delta - (1.0 + delta) * std::log1p(delta)));
}

}  // namespace internal

double ChernoffTail(const ChernoffParams& p) {
  if (!(p.alpha > 0.0 && p.alpha < 1.0) || !(p.width >= 1.0) ||
      !(p.beta > 0.0 && p.beta <= 1.0) || !(p.mu >= 0.0) ||
      p.mu > p.alpha * p.width + 1e-12) {
    throw Error(ErrorCode::kPreconditionViolated,
                "Chernoff tail needs 0 < alpha < 1, W >= 1, 0 < beta <= 1, "
                "0 <= mu <= alpha W");
  }
  if (!((1.0 - p.alpha) * p.width > p.beta)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "Chernoff tail needs (1 - alpha) W > beta");
  }
  const double slack = p.width - p.beta;
  const double log_base =
      std::log(p.alpha) + (1.0 - p.alpha) + std::log(p.width) - std::log(slack);
  return std::exp(slack / p.beta * log_base);
}

double LemmaA3Slack(double x) {
  RequireUnitInterval(x, "x");
  return x - std::exp(-(1.0 / kE) / x);
}

double LemmaA4Slack(double x, double y) {
  RequireUnitInterval(x, "x");
  if (!(y >= 2.0) || !std::isfinite(y)) {
    throw Error(ErrorCode::kDomainError, "y must be >= 2");
  }
  return x / y - std::exp(-(2.0 / kE) * y / (2.0 * x));
}

double LemmaA5Slack(double eps, double x) {
  RequireUnitInterval(eps, "eps");
  RequireUnitInterval(x, "x");
  return eps * x / 2.0 - std::exp((std::log(eps) - 2.0 / kE) / x);
}

bool LemmaA3Holds(double x) { return LemmaA3Slack(x) >= -kInequalityTolerance; }

bool LemmaA4Holds(double x, double y) {
  return LemmaA4Slack(x, y) >= -kInequalityTolerance;
}

bool LemmaA5Holds(double eps, double x) {
  return LemmaA5Slack(eps, x) >= -kInequalityTolerance;
}

TailEstimate MonteCarloTail(std::span<const double> coeffs,
                            std::span<const double> probs, double threshold,
                            int64_t samples, RandomStream& rng) {
  if (coeffs.size() != probs.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "coeffs and probs must have the same length");
  }
  if (samples < 1) {
    throw Error(ErrorCode::kInvalidArgument, "samples must be >= 1");
  }
  int64_t exceed = 0;
  for (int64_t s = 0; s < samples; ++s) {
    double sum = 0.0;
    for (size_t l = 0; l < coeffs.size(); ++l) {
      if (rng.Uniform() < probs[l]) sum += coeffs[l];
    }
    if (sum > threshold + kThresholdGuard) ++exceed;
  }
  TailEstimate out;
  out.samples = samples;
  out.probability = static_cast<double>(exceed) / static_cast<double>(samples);
  out.std_error = std::sqrt(out.probability * (1.0 - out.probability) /
                            static_cast<double>(samples));
  return out;
}

namespace {

template <typename Slack>
void Accumulate(GridCheck& check, double a, double b, Slack slack) {
  const double s = slack(a, b);
  ++check.points;
  if (s < -kInequalityTolerance) ++check.violations;
  if (check.points == 1 || s < check.min_slack) {
    check.min_slack = s;
    check.worst_a = a;
    check.worst_b = b;
  }
}

}  // namespace

std::vector<GridCheck> CheckLemmaGrids() {
  GridCheck a3{.name = "lemma A3"};
  for (int k = 1; k <= 10000; ++k) {
    Accumulate(a3, k * 1e-4, 0.0,
               [](double x, double) { return LemmaA3Slack(x); });
  }
  GridCheck a4{.name = "lemma A4"};
  for (int k = 1; k <= 1000; ++k) {
    for (int t = 0; t <= 96; ++t) {
      Accumulate(a4, k * 1e-3, 2.0 + 0.5 * t, LemmaA4Slack);
    }
  }
  GridCheck a5{.name = "lemma A5"};
  for (int k = 1; k <= 1000; ++k) {
    for (int q = 1; q <= 1000; ++q) {
      Accumulate(a5, k * 1e-3, q * 1e-3, LemmaA5Slack);
    }
  }
  return {a3, a4, a5};
}

GridCheck CheckChernoffDominance(int draws, int64_t samples, uint64_t seed) {
  GridCheck check{.name = "chernoff tail"};
  for (int d = 0; d < draws; ++d) {
    RandomStream rng = RandomStream::ForTrial(seed, static_cast<uint64_t>(d));
    ChernoffParams p;
    p.width = 1.0 + 9.0 * rng.Uniform();
    p.beta = std::max(0.05, 1.0 - rng.Uniform());
    p.alpha = (1.0 - p.beta / p.width) * std::max(1e-3, 0.999 * rng.Uniform());
    const int k = 1 + static_cast<int>(rng.Below(40));
    std::vector<double> coeffs(k);
    std::vector<double> probs(k);
    double raw_mean = 0.0;
    for (int l = 0; l < k; ++l) {
      coeffs[l] = p.beta * (1.0 - rng.Uniform());
      probs[l] = rng.Uniform();
      raw_mean += coeffs[l] * probs[l];
    }
    const double target = p.alpha * p.width * (1.0 - rng.Uniform());
    const double scale = raw_mean > 0.0 ? target / raw_mean : 0.0;
    p.mu = 0.0;
    for (int l = 0; l < k; ++l) {
      probs[l] = std::min(1.0, probs[l] * scale);
      p.mu += coeffs[l] * probs[l];
    }
    p.mu = std::min(p.mu, p.alpha * p.width);
    const double bound = ChernoffTail(p);
    const TailEstimate mc =
        MonteCarloTail(coeffs, probs, p.width - p.beta, samples, rng);
    ++check.points;
    const double slack = bound + 4.0 * mc.std_error - mc.probability;
    if (slack < 0.0) ++check.violations;
    if (check.points == 1 || slack < check.min_slack) {
      check.min_slack = slack;
      check.worst_a = p.alpha;
      check.worst_b = p.width;
    }
  }
  return check;
}

}  // namespace pipround
