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

// Packing integer program data model:
//
//   maximize c.x  subject to  A x <= b,  x in {0,1}^n
//
// with c, A, b nonnegative. A is stored row-major with sorted column indices
// per row; a column-major index is kept alongside for column statistics and
// for the alteration kernels, which walk the columns of rounded items.

#ifndef PIPROUND_INSTANCE_H_
#define PIPROUND_INSTANCE_H_

#include <cstdint>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace pipround {

// Capacity comparisons use this absolute slack everywhere.
inline constexpr double kFeasibilityTolerance = 1e-9;
// Normalization identities (b_i == W, max entry == 1) hold to this tolerance.
inline constexpr double kNormalizationTolerance = 1e-12;

struct MatrixEntry {
  int index;  // column index in a row, or row index in a column
  double value;
};

struct Triplet {
  int row;
  int col;
  double value;
};

class PipInstance {
 public:
  PipInstance() = default;

  // Builds from a dense m x n matrix; zero entries are not stored. Throws
  // Error(kInvalidInstance) on ragged rows or length mismatches. Values are
  // stored as given so Validate() can report sign and finiteness problems.
  static PipInstance FromDense(std::vector<double> objective,
                               const std::vector<std::vector<double>>& matrix,
                               std::vector<double> capacity);

  // Builds from coordinate triples. Throws Error(kInvalidInstance) on
  // out-of-range indices or repeated (row, col) pairs.
  static PipInstance FromTriplets(int num_cols, int num_rows,
                                  std::vector<double> objective,
                                  std::span<const Triplet> triplets,
                                  std::vector<double> capacity);

  int num_cols() const { return static_cast<int>(objective_.size()); }
  int num_rows() const { return static_cast<int>(capacity_.size()); }
  int64_t num_nonzeros() const;

  const std::vector<double>& objective() const { return objective_; }
  const std::vector<double>& capacity() const { return capacity_; }
  std::span<const MatrixEntry> row(int i) const { return rows_[i]; }
  std::span<const MatrixEntry> column(int j) const { return cols_[j]; }

  // Coefficient A_ij (0 when not stored). O(log nnz(row i)).
  double coefficient(int row, int col) const;

  std::vector<std::vector<double>> ToDense() const;
  std::vector<Triplet> ToTriplets() const;

  double ObjectiveValue(std::span<const double> x) const;
  double ObjectiveValue(std::span<const uint8_t> x) const;
  std::vector<double> RowLoads(std::span<const double> x) const;
  std::vector<double> RowLoads(std::span<const uint8_t> x) const;

  // A x <= b + tolerance componentwise.
  bool IsFeasible(std::span<const uint8_t> x,
                  double tolerance = kFeasibilityTolerance) const;
  bool IsFeasible(std::span<const double> x,
                  double tolerance = kFeasibilityTolerance) const;

  // Columns without any stored entry. Such items consume no capacity and are
  // set to 1 by every solver in this library.
  std::vector<int> EmptyColumns() const;

  // Returns a copy with every entry of row i multiplied by scale[i] and the
  // capacity vector replaced.
  PipInstance ScaleRows(std::span<const double> scale,
                        std::vector<double> new_capacity) const;

 private:
  void BuildColumns();

  std::vector<double> objective_;
  std::vector<double> capacity_;
  std::vector<std::vector<MatrixEntry>> rows_;
  std::vector<std::vector<MatrixEntry>> cols_;
};

enum class ViolationKind {
  kEmptyProblem,        // n == 0 or m == 0
  kNegativeEntry,       // A_ij < 0
  kNonFiniteEntry,      // A_ij is inf or nan
  kNegativeObjective,   // c_j < 0
  kNonFiniteObjective,  // c_j is inf or nan
  kNonpositiveCapacity, // b_i <= 0 (or not finite)
  kEmptyColumn,         // warning only: column j has no positive entry
};

struct Violation {
  ViolationKind kind;
  int row = -1;
  int col = -1;

  bool is_warning() const { return kind == ViolationKind::kEmptyColumn; }
  bool operator==(const Violation&) const = default;
};

std::string ToString(const Violation& violation);

// Every violated structural invariant, in a deterministic order (objective,
// capacities, matrix entries row-major, then empty-column warnings).
std::vector<Violation> Validate(const PipInstance& instance);

// True when Validate() reports nothing but warnings.
bool IsValid(std::span<const Violation> violations);

// W = min over positive A_ij of b_i / A_ij. Throws Error(kAllZeroMatrix).
double WidthOf(const PipInstance& instance);

struct ColumnSparsity {
  int delta0 = 0;       // max nonzeros in a column
  double delta1 = 0.0;  // max column sum
};
ColumnSparsity ColumnSparsityOf(const PipInstance& instance);

// A row-scaled instance where every capacity equals the width W, all entries
// lie in [0,1] and the largest entry is 1.
struct NormalizedInstance {
  PipInstance base;
  double width = 1.0;
  int delta0 = 0;
  double delta1 = 0.0;
  std::vector<double> row_scale;  // base row i = raw row i * row_scale[i]

  int num_cols() const { return base.num_cols(); }
  int num_rows() const { return base.num_rows(); }
};

// Throws Error(kInvalidInstance) if Validate() reports an error,
// Error(kAllZeroMatrix) if A has no positive entry and Error(kWidthBelowOne)
// if W < 1.
NormalizedInstance Normalize(const PipInstance& instance);

}  // namespace pipround

#endif  // PIPROUND_INSTANCE_H_
