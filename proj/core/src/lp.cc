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

#include "pipround/lp.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pipround/error.h"

namespace pipround {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();
constexpr double kRatioTieTolerance = 1e-12;

class BoundedPrimalSimplex {
 public:
  BoundedPrimalSimplex(const PipInstance& inst, const LpOptions& options)
      : inst_(inst),
        options_(options),
        n_(inst.num_cols()),
        m_(inst.num_rows()),
        head_(m_),
        state_(n_ + m_, VariableState::kAtLower),
        x_basic_(m_),
        inverse_(static_cast<size_t>(m_) * m_, 0.0),
        y_(m_),
        alpha_(m_) {
    for (int r = 0; r < m_; ++r) {
      head_[r] = n_ + r;
      state_[n_ + r] = VariableState::kBasic;
      x_basic_[r] = inst.capacity()[r];
      inverse_[Index(r, r)] = 1.0;
    }
  }

  FractionalSolution Run() {
    const int64_t bland_after = 10LL * (n_ + m_);
    int64_t iteration = 0;
    int updates_since_refactor = 0;
    FractionalSolution out;
    for (;; ++iteration) {
      if (iteration >= options_.max_iterations) {
        throw Error(ErrorCode::kIterationLimit,
                    "simplex hit the iteration limit of " +
                        std::to_string(options_.max_iterations));
      }
      const bool bland = iteration >= bland_after;
      if (bland) ++out.bland_iterations;
      ComputeDuals();
      const int entering = Price(bland);
      if (entering < 0) break;
      ComputeColumn(entering);
      Step(entering);
      if (++updates_since_refactor >= options_.refactor_interval) {
        Refactor();
        updates_since_refactor = 0;
      }
    }
    out.iterations = iteration;
    Finish(out);
    return out;
  }

 private:
  size_t Index(int r, int k) const { return static_cast<size_t>(r) * m_ + k; }

  double Cost(int v) const { return v < n_ ? inst_.objective()[v] : 0.0; }
  double Upper(int v) const { return v < n_ ? 1.0 : kInfinity; }

  // y^T = c_B^T B^{-1}.
  void ComputeDuals() {
    std::fill(y_.begin(), y_.end(), 0.0);
    for (int r = 0; r < m_; ++r) {
      const double cost = Cost(head_[r]);
      if (cost == 0.0) continue;
      const double* row = &inverse_[Index(r, 0)];
      for (int k = 0; k < m_; ++k) y_[k] += cost * row[k];
    }
  }

  double ReducedCost(int v) const {
    if (v >= n_) return -y_[v - n_];
    double d = inst_.objective()[v];
    for (const MatrixEntry& e : inst_.column(v)) d -= y_[e.index] * e.value;
    return d;
  }

  // Returns the entering variable or -1 at optimality.
  int Price(bool bland) const {
    int best = -1;
    double best_score = 0.0;
    for (int v = 0; v < n_ + m_; ++v) {
      const VariableState s = state_[v];
      if (s == VariableState::kBasic) continue;
      const double d = ReducedCost(v);
      double score = 0.0;
      if (s == VariableState::kAtLower && d > options_.optimality_tolerance) {
        score = d;
      } else if (s == VariableState::kAtUpper &&
                 d < -options_.optimality_tolerance) {
        score = -d;
      } else {
        continue;
      }
      if (bland) return v;
      if (score > best_score) {
        best_score = score;
        best = v;
      }
    }
    return best;
  }

  // alpha = B^{-1} a_v.
  void ComputeColumn(int v) {
    if (v >= n_) {
      const int k = v - n_;
      for (int r = 0; r < m_; ++r) alpha_[r] = inverse_[Index(r, k)];
      return;
    }
    std::fill(alpha_.begin(), alpha_.end(), 0.0);
    for (const MatrixEntry& e : inst_.column(v)) {
      for (int r = 0; r < m_; ++r) alpha_[r] += inverse_[Index(r, e.index)] * e.value;
    }
  }

  void Step(int entering) {
    const double direction =
        state_[entering] == VariableState::kAtLower ? 1.0 : -1.0;
    // Basic values move as x_B(t) = x_B - t * direction * alpha.
    double t_min = kInfinity;
    int leave_row = -1;
    for (int r = 0; r < m_; ++r) {
      const double g = direction * alpha_[r];
      double limit;
      if (g > options_.pivot_tolerance) {
        limit = std::max(0.0, x_basic_[r]) / g;
      } else if (g < -options_.pivot_tolerance) {
        const double upper = Upper(head_[r]);
        if (std::isinf(upper)) continue;
        limit = std::max(0.0, upper - x_basic_[r]) / -g;
      } else {
        continue;
      }
      if (limit < t_min - kRatioTieTolerance) {
        t_min = limit;
        leave_row = r;
      } else if (limit <= t_min + kRatioTieTolerance &&
                 head_[r] < head_[leave_row]) {
        t_min = std::min(t_min, limit);
        leave_row = r;
      }
    }
    const double flip = Upper(entering);
    if (flip <= t_min) {
      for (int r = 0; r < m_; ++r) x_basic_[r] -= flip * direction * alpha_[r];
      state_[entering] = direction > 0 ? VariableState::kAtUpper
                                       : VariableState::kAtLower;
      return;
    }
    if (leave_row < 0) {
      throw Error(ErrorCode::kIterationLimit,
                  "unbounded ray in a bounded LP; numerical trouble");
    }
    const double t = t_min;
    for (int r = 0; r < m_; ++r) x_basic_[r] -= t * direction * alpha_[r];
    const int leaving = head_[leave_row];
    state_[leaving] = direction * alpha_[leave_row] > 0 ? VariableState::kAtLower
                                                        : VariableState::kAtUpper;
    x_basic_[leave_row] = direction > 0 ? t : Upper(entering) - t;
    head_[leave_row] = entering;
    state_[entering] = VariableState::kBasic;

    const double pivot = alpha_[leave_row];
    double* pivot_row = &inverse_[Index(leave_row, 0)];
    for (int k = 0; k < m_; ++k) pivot_row[k] /= pivot;
    for (int r = 0; r < m_; ++r) {
      if (r == leave_row || alpha_[r] == 0.0) continue;
      const double factor = alpha_[r];
      double* row = &inverse_[Index(r, 0)];
      for (int k = 0; k < m_; ++k) row[k] -= factor * pivot_row[k];
    }
  }

  // Rebuilds B^{-1} by Gauss-Jordan with partial pivoting, then recomputes
  // the basic values from the nonbasic bounds.
  void Refactor() {
    std::vector<double> basis(static_cast<size_t>(m_) * m_, 0.0);
    for (int r = 0; r < m_; ++r) {
      const int v = head_[r];
      if (v >= n_) {
        basis[Index(v - n_, r)] = 1.0;
      } else {
        for (const MatrixEntry& e : inst_.column(v)) basis[Index(e.index, r)] = e.value;
      }
    }
    std::vector<double> inv(static_cast<size_t>(m_) * m_, 0.0);
    for (int r = 0; r < m_; ++r) inv[Index(r, r)] = 1.0;
    for (int col = 0; col < m_; ++col) {
      int pivot_row = col;
      for (int r = col + 1; r < m_; ++r) {
        if (std::abs(basis[Index(r, col)]) > std::abs(basis[Index(pivot_row, col)])) {
          pivot_row = r;
        }
      }
      if (std::abs(basis[Index(pivot_row, col)]) < options_.pivot_tolerance) {
        return;  // keep the product-form inverse; the basis looks singular
      }
      if (pivot_row != col) {
        for (int k = 0; k < m_; ++k) {
          std::swap(basis[Index(pivot_row, k)], basis[Index(col, k)]);
          std::swap(inv[Index(pivot_row, k)], inv[Index(col, k)]);
        }
      }
      const double p = basis[Index(col, col)];
      for (int k = 0; k < m_; ++k) {
        basis[Index(col, k)] /= p;
        inv[Index(col, k)] /= p;
      }
      for (int r = 0; r < m_; ++r) {
        if (r == col) continue;
        const double f = basis[Index(r, col)];
        if (f == 0.0) continue;
        for (int k = 0; k < m_; ++k) {
          basis[Index(r, k)] -= f * basis[Index(col, k)];
          inv[Index(r, k)] -= f * inv[Index(col, k)];
        }
      }
    }
    inverse_ = std::move(inv);
    std::vector<double> rhs = inst_.capacity();
    for (int v = 0; v < n_; ++v) {
      if (state_[v] != VariableState::kAtUpper) continue;
      for (const MatrixEntry& e : inst_.column(v)) rhs[e.index] -= e.value;
    }
    for (int r = 0; r < m_; ++r) {
      double sum = 0.0;
      for (int k = 0; k < m_; ++k) sum += inverse_[Index(r, k)] * rhs[k];
      x_basic_[r] = sum;
    }
  }

  void Finish(FractionalSolution& out) {
    // Empty columns consume nothing; pin them at 1 even when c_j = 0.
    for (int v = 0; v < n_; ++v) {
      if (inst_.column(v).empty() && state_[v] == VariableState::kAtLower) {
        state_[v] = VariableState::kAtUpper;
      }
    }
    out.x.assign(n_, 0.0);
    for (int v = 0; v < n_; ++v) {
      if (state_[v] == VariableState::kAtUpper) out.x[v] = 1.0;
    }
    for (int r = 0; r < m_; ++r) {
      if (head_[r] < n_) out.x[head_[r]] = std::clamp(x_basic_[r], 0.0, 1.0);
    }
    out.objective = inst_.ObjectiveValue(std::span<const double>(out.x));
    out.status = LpStatus::kOptimal;

    ComputeDuals();
    out.row_duals.resize(m_);
    out.dual_objective = 0.0;
    for (int i = 0; i < m_; ++i) {
      out.row_duals[i] = std::max(0.0, y_[i]);
      out.dual_objective += inst_.capacity()[i] * out.row_duals[i];
    }
    out.reduced_costs.resize(n_);
    for (int j = 0; j < n_; ++j) {
      double d = inst_.objective()[j];
      for (const MatrixEntry& e : inst_.column(j)) d -= out.row_duals[e.index] * e.value;
      out.reduced_costs[j] = d;
      out.dual_objective += std::max(0.0, d);
    }
    out.basic_variables = head_;
    out.states = state_;
  }

  const PipInstance& inst_;
  const LpOptions options_;
  const int n_;
  const int m_;
  std::vector<int> head_;
  std::vector<VariableState> state_;
  std::vector<double> x_basic_;
  std::vector<double> inverse_;  // row-major m x m
  std::vector<double> y_;
  std::vector<double> alpha_;
};

const char* StateName(VariableState s) {
  switch (s) {
    case VariableState::kBasic:
      return "basic";
    case VariableState::kAtLower:
      return "lower";
    case VariableState::kAtUpper:
      return "upper";
  }
  return "?";
}

}  // namespace

FractionalSolution SolveLp(const PipInstance& instance,
                           const LpOptions& options) {
  return BoundedPrimalSimplex(instance, options).Run();
}

FractionalSolution SolveLp(const NormalizedInstance& instance,
                           const LpOptions& options) {
  return SolveLp(instance.base, options);
}

double LpObjectiveGap(const FractionalSolution& lp, double ip_opt) {
  return lp.objective / std::max(ip_opt, 1.0);
}

void WriteBasis(std::ostream& out, const PipInstance& instance,
                const FractionalSolution& s) {
  const int n = instance.num_cols();
  out << "# lp basis: n=" << n << " m=" << instance.num_rows()
      << " iterations=" << s.iterations << " bland=" << s.bland_iterations
      << "\n";
  out.precision(17);
  out << "primal_objective " << s.objective << "\n";
  out << "dual_objective " << s.dual_objective << "\n";
  for (size_t r = 0; r < s.basic_variables.size(); ++r) {
    const int v = s.basic_variables[r];
    out << "basis " << r << " "
        << (v < n ? "x" + std::to_string(v) : "s" + std::to_string(v - n))
        << "\n";
  }
  for (int j = 0; j < n; ++j) {
    out << "x" << j << " " << StateName(s.states[j]) << " " << s.x[j]
        << " reduced_cost " << s.reduced_costs[j] << "\n";
  }
  for (size_t i = 0; i < s.row_duals.size(); ++i) {
    out << "y" << i << " " << s.row_duals[i] << "\n";
  }
}

}  // namespace pipround
