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

#include "pipround/instance.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pipround/error.h"

namespace pipround {

namespace {

template <typename T>
double DotRow(std::span<const MatrixEntry> row, std::span<const T> x) {
  double sum = 0.0;
  for (const MatrixEntry& e : row) sum += e.value * static_cast<double>(x[e.index]);
  return sum;
}

template <typename T>
std::vector<double> Loads(const PipInstance& inst, std::span<const T> x) {
  if (static_cast<int>(x.size()) != inst.num_cols()) {
    throw Error(ErrorCode::kInvalidArgument, "solution length != num_cols");
  }
  std::vector<double> loads(inst.num_rows());
  for (int i = 0; i < inst.num_rows(); ++i) loads[i] = DotRow(inst.row(i), x);
  return loads;
}

template <typename T>
bool Feasible(const PipInstance& inst, std::span<const T> x, double tol) {
  const std::vector<double> loads = Loads(inst, x);
  for (int i = 0; i < inst.num_rows(); ++i) {
    if (!(loads[i] <= inst.capacity()[i] + tol)) return false;
  }
  return true;
}

}  // namespace

PipInstance PipInstance::FromDense(
    std::vector<double> objective,
    const std::vector<std::vector<double>>& matrix,
    std::vector<double> capacity) {
  const size_t n = objective.size();
  if (matrix.size() != capacity.size()) {
    throw Error(ErrorCode::kInvalidInstance,
                "matrix has " + std::to_string(matrix.size()) +
                    " rows but capacity has " +
                    std::to_string(capacity.size()) + " entries");
  }
  PipInstance inst;
  inst.objective_ = std::move(objective);
  inst.capacity_ = std::move(capacity);
  inst.rows_.resize(matrix.size());
  for (size_t i = 0; i < matrix.size(); ++i) {
    if (matrix[i].size() != n) {
      throw Error(ErrorCode::kInvalidInstance,
                  "row " + std::to_string(i) + " has " +
                      std::to_string(matrix[i].size()) + " entries, expected " +
                      std::to_string(n));
    }
    for (size_t j = 0; j < n; ++j) {
      if (matrix[i][j] != 0.0) {
        inst.rows_[i].push_back({static_cast<int>(j), matrix[i][j]});
      }
    }
  }
  inst.BuildColumns();
  return inst;
}

PipInstance PipInstance::FromTriplets(int num_cols, int num_rows,
                                      std::vector<double> objective,
                                      std::span<const Triplet> triplets,
                                      std::vector<double> capacity) {
  if (num_cols < 0 || num_rows < 0 ||
      static_cast<int>(objective.size()) != num_cols ||
      static_cast<int>(capacity.size()) != num_rows) {
    throw Error(ErrorCode::kInvalidInstance,
                "dimension mismatch between n/m and the c/b vectors");
  }
  PipInstance inst;
  inst.objective_ = std::move(objective);
  inst.capacity_ = std::move(capacity);
  inst.rows_.resize(num_rows);
  for (const Triplet& t : triplets) {
    if (t.row < 0 || t.row >= num_rows || t.col < 0 || t.col >= num_cols) {
      throw Error(ErrorCode::kInvalidInstance,
                  "entry (" + std::to_string(t.row) + "," +
                      std::to_string(t.col) + ") out of range");
    }
    inst.rows_[t.row].push_back({t.col, t.value});
  }
  for (int i = 0; i < num_rows; ++i) {
    auto& row = inst.rows_[i];
    std::sort(row.begin(), row.end(),
              [](const MatrixEntry& a, const MatrixEntry& b) {
                return a.index < b.index;
              });
    for (size_t k = 1; k < row.size(); ++k) {
      if (row[k].index == row[k - 1].index) {
        throw Error(ErrorCode::kInvalidInstance,
                    "duplicate entry (" + std::to_string(i) + "," +
                        std::to_string(row[k].index) + ")");
      }
    }
    std::erase_if(row, [](const MatrixEntry& e) { return e.value == 0.0; });
  }
  inst.BuildColumns();
  return inst;
}

void PipInstance::BuildColumns() {
  cols_.assign(objective_.size(), {});
  for (int i = 0; i < num_rows(); ++i) {
    for (const MatrixEntry& e : rows_[i]) cols_[e.index].push_back({i, e.value});
  }
}

int64_t PipInstance::num_nonzeros() const {
  int64_t total = 0;
  for (const auto& row : rows_) total += static_cast<int64_t>(row.size());
  return total;
}

double PipInstance::coefficient(int row, int col) const {
  const auto& r = rows_[row];
  auto it = std::lower_bound(
      r.begin(), r.end(), col,
      [](const MatrixEntry& e, int c) { return e.index < c; });
  return (it != r.end() && it->index == col) ? it->value : 0.0;
}

std::vector<std::vector<double>> PipInstance::ToDense() const {
  std::vector<std::vector<double>> dense(num_rows(),
                                         std::vector<double>(num_cols(), 0.0));
  for (int i = 0; i < num_rows(); ++i) {
    for (const MatrixEntry& e : rows_[i]) dense[i][e.index] = e.value;
  }
  return dense;
}

std::vector<Triplet> PipInstance::ToTriplets() const {
  std::vector<Triplet> out;
  out.reserve(num_nonzeros());
  for (int i = 0; i < num_rows(); ++i) {
    for (const MatrixEntry& e : rows_[i]) out.push_back({i, e.index, e.value});
  }
  return out;
}

double PipInstance::ObjectiveValue(std::span<const double> x) const {
  double sum = 0.0;
  for (int j = 0; j < num_cols(); ++j) sum += objective_[j] * x[j];
  return sum;
}

double PipInstance::ObjectiveValue(std::span<const uint8_t> x) const {
  double sum = 0.0;
  for (int j = 0; j < num_cols(); ++j) {
    if (x[j]) sum += objective_[j];
  }
  return sum;
}

std::vector<double> PipInstance::RowLoads(std::span<const double> x) const {
  return Loads(*this, x);
}

std::vector<double> PipInstance::RowLoads(std::span<const uint8_t> x) const {
  return Loads(*this, x);
}

bool PipInstance::IsFeasible(std::span<const uint8_t> x,
                             double tolerance) const {
  return Feasible(*this, x, tolerance);
}

bool PipInstance::IsFeasible(std::span<const double> x,
                             double tolerance) const {
  return Feasible(*this, x, tolerance);
}

std::vector<int> PipInstance::EmptyColumns() const {
  std::vector<int> empty;
  for (int j = 0; j < num_cols(); ++j) {
    if (cols_[j].empty()) empty.push_back(j);
  }
  return empty;
}

PipInstance PipInstance::ScaleRows(std::span<const double> scale,
                                   std::vector<double> new_capacity) const {
  PipInstance out = *this;
  out.capacity_ = std::move(new_capacity);
  for (int i = 0; i < num_rows(); ++i) {
    for (MatrixEntry& e : out.rows_[i]) e.value *= scale[i];
  }
  out.BuildColumns();
  return out;
}

std::string ToString(const Violation& v) {
  std::ostringstream os;
  switch (v.kind) {
    case ViolationKind::kEmptyProblem:
      os << "EmptyProblem";
      break;
    case ViolationKind::kNegativeEntry:
      os << "NegativeEntry(" << v.row << "," << v.col << ")";
      break;
    case ViolationKind::kNonFiniteEntry:
      os << "NonFiniteEntry(" << v.row << "," << v.col << ")";
      break;
    case ViolationKind::kNegativeObjective:
      os << "NegativeObjective(" << v.col << ")";
      break;
    case ViolationKind::kNonFiniteObjective:
      os << "NonFiniteObjective(" << v.col << ")";
      break;
    case ViolationKind::kNonpositiveCapacity:
      os << "NonpositiveCapacity(" << v.row << ")";
      break;
    case ViolationKind::kEmptyColumn:
      os << "EmptyColumn(" << v.col << ") [warning]";
      break;
  }
  return os.str();
}

std::vector<Violation> Validate(const PipInstance& inst) {
  std::vector<Violation> out;
  if (inst.num_cols() < 1 || inst.num_rows() < 1) {
    out.push_back({ViolationKind::kEmptyProblem});
  }
  for (int j = 0; j < inst.num_cols(); ++j) {
    const double c = inst.objective()[j];
    if (!std::isfinite(c)) {
      out.push_back({ViolationKind::kNonFiniteObjective, -1, j});
    } else if (c < 0.0) {
      out.push_back({ViolationKind::kNegativeObjective, -1, j});
    }
  }
  for (int i = 0; i < inst.num_rows(); ++i) {
    const double b = inst.capacity()[i];
    if (!std::isfinite(b) || !(b > 0.0)) {
      out.push_back({ViolationKind::kNonpositiveCapacity, i, -1});
    }
  }
  for (int i = 0; i < inst.num_rows(); ++i) {
    for (const MatrixEntry& e : inst.row(i)) {
      if (!std::isfinite(e.value)) {
        out.push_back({ViolationKind::kNonFiniteEntry, i, e.index});
      } else if (e.value < 0.0) {
        out.push_back({ViolationKind::kNegativeEntry, i, e.index});
      }
    }
  }
  for (int j = 0; j < inst.num_cols(); ++j) {
    const auto col = inst.column(j);
    const bool has_positive = std::any_of(
        col.begin(), col.end(), [](const MatrixEntry& e) { return e.value > 0; });
    if (!has_positive) out.push_back({ViolationKind::kEmptyColumn, -1, j});
  }
  return out;
}

bool IsValid(std::span<const Violation> violations) {
  return std::all_of(violations.begin(), violations.end(),
                     [](const Violation& v) { return v.is_warning(); });
}

double WidthOf(const PipInstance& inst) {
  double width = std::numeric_limits<double>::infinity();
  for (int i = 0; i < inst.num_rows(); ++i) {
    for (const MatrixEntry& e : inst.row(i)) {
      if (e.value > 0.0) width = std::min(width, inst.capacity()[i] / e.value);
    }
  }
  if (std::isinf(width)) {
    throw Error(ErrorCode::kAllZeroMatrix, "matrix has no positive entry");
  }
  return width;
}

ColumnSparsity ColumnSparsityOf(const PipInstance& inst) {
  ColumnSparsity s;
  for (int j = 0; j < inst.num_cols(); ++j) {
    int count = 0;
    double sum = 0.0;
    for (const MatrixEntry& e : inst.column(j)) {
      if (e.value > 0.0) {
        ++count;
        sum += e.value;
      }
    }
    s.delta0 = std::max(s.delta0, count);
    s.delta1 = std::max(s.delta1, sum);
  }
  return s;
}

NormalizedInstance Normalize(const PipInstance& inst) {
  const std::vector<Violation> violations = Validate(inst);
  if (!IsValid(violations)) {
    std::string message = "invalid instance:";
    for (const Violation& v : violations) {
      if (!v.is_warning()) message += " " + ToString(v);
    }
    throw Error(ErrorCode::kInvalidInstance, message);
  }
  const double width = WidthOf(inst);
  if (width < 1.0) {
    throw Error(ErrorCode::kWidthBelowOne,
                "width " + std::to_string(width) +
                    " < 1: some item has A_ij > b_i and can never be packed; "
                    "drop such items (fix x_j = 0) and retry");
  }
  NormalizedInstance out;
  out.width = width;
  out.row_scale.resize(inst.num_rows());
  for (int i = 0; i < inst.num_rows(); ++i) {
    out.row_scale[i] = width / inst.capacity()[i];
  }
  out.base = inst.ScaleRows(out.row_scale,
                            std::vector<double>(inst.num_rows(), width));
  // Scaled entries are <= 1 in exact arithmetic; clip the last-ulp excess so
  // the [0,1] invariant holds exactly.
  PipInstance& base = out.base;
  std::vector<Triplet> triplets = base.ToTriplets();
  bool clipped = false;
  for (Triplet& t : triplets) {
    if (t.value > 1.0) {
      t.value = 1.0;
      clipped = true;
    }
  }
  if (clipped) {
    base = PipInstance::FromTriplets(base.num_cols(), base.num_rows(),
                                     base.objective(), triplets,
                                     base.capacity());
  }
  const ColumnSparsity sparsity = ColumnSparsityOf(base);
  out.delta0 = sparsity.delta0;
  out.delta1 = sparsity.delta1;
  return out;
}

}  // namespace pipround
