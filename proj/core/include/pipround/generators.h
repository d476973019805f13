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

// Instance generators. Every generator is a pure function of its arguments;
// randomness comes from a RandomStream keyed by the seed.

#ifndef PIPROUND_GENERATORS_H_
#define PIPROUND_GENERATORS_H_

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pipround/instance.h"

namespace pipround {

// Undirected simple graph; edges are stored with u < v, sorted, unique.
class Graph {
 public:
  // Throws Error(kInvalidArgument) on self-loops or out-of-range endpoints.
  // Duplicate edges (in either orientation) are merged.
  Graph(int num_vertices, std::vector<std::pair<int, int>> edges);

  int num_vertices() const { return num_vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool HasEdge(int u, int v) const;
  int MaxDegree() const;

 private:
  int num_vertices_;
  std::vector<std::pair<int, int>> edges_;
};

Graph CompleteGraph(int n);
Graph PathGraph(int n);
Graph RandomGraph(int n, double p, uint64_t seed);

// Edge list text: one "u v" pair per line, 0-based; blank lines and lines
// starting with '#' are skipped. The vertex count is one more than the
// largest endpoint unless `num_vertices` is given.
Graph ReadEdgeList(std::istream& in, int num_vertices = -1);

// Maximum independent set as a packing program: A_vv = 1, A_uv = A_vu = 1/n
// for every edge uv, b = 1, c = 1. Feasible 0/1 points are exactly the
// characteristic vectors of independent sets; W = 1 and D1 <= 2.
PipInstance MisToPip(const Graph& graph);

// Entries are uniform in (0, 1] with probability `density`; one entry per
// column (in a uniformly chosen row) is forced to 1, so after normalization
// the width is exactly target_width. b_i = target_width, c_j uniform [0, 1).
PipInstance RandomInstance(int n, int m, double target_width, double density,
                           uint64_t seed);

// Every column has exactly `column_nnz` nonzeros in distinct random rows, one
// of them equal to 1 and the others uniform in (0, 1], so D0 = column_nnz
// and D1 <= column_nnz. b_i = target_width. Useful for LargeW instances,
// which need small D1 relative to W.
PipInstance SparseColumnInstance(int n, int m, double target_width,
                                 int column_nnz, uint64_t seed);

// Width 1 + eps instances with both coefficient classes in every row that
// has entries: each nonzero is small (uniform in (0, eps/2]) or big (uniform
// in (eps/2, 1]) with equal probability; one entry per column is forced to 1.
PipInstance MixedWidthInstance(int n, int m, double eps, double density,
                               uint64_t seed);

enum class KnapsackProfile { kUniform, kSmallItems, kMixedBigSmall };

// Throws Error(kInvalidArgument) for unknown names ("uniform", "small",
// "mixed").
KnapsackProfile ParseKnapsackProfile(std::string_view name);

// Single-constraint instance with b = [W]. With eps = min(W - 1, 1):
//   uniform         sizes uniform in (0, 1], one forced to 1 (width W)
//   smallItems      sizes uniform in (0, eps/2]; the width is then
//                   W / max size, larger than W
//   mixedBigSmall   item 0 has size 1, odd items are small (<= eps/2) and
//                   even items big; both classes are present once n >= 2
//                   (width W)
// Throws Error(kInvalidArgument) if n < 1 or W < 1; smallItems and
// mixedBigSmall also need W > 1.
PipInstance KnapsackInstance(int n, double width, KnapsackProfile profile,
                             uint64_t seed);

}  // namespace pipround

#endif  // PIPROUND_GENERATORS_H_
