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

#include "pipround/generators.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pipround/error.h"
#include "pipround/random.h"

namespace pipround {

namespace {

// Uniform in (0, 1].
double UnitOpenClosed(RandomStream& rng) { return 1.0 - rng.Uniform(); }

void RequireCounts(int n, int m) {
  if (n < 1 || m < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need n >= 1 and m >= 1");
  }
}

void RequireWidth(double width) {
  if (!(width >= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "target width must be >= 1");
  }
}

std::vector<double> RandomObjective(int n, RandomStream& rng) {
  std::vector<double> c(n);
  for (double& v : c) v = rng.Uniform();
  return c;
}

}  // namespace

Graph::Graph(int num_vertices, std::vector<std::pair<int, int>> edges)
    : num_vertices_(num_vertices) {
  if (num_vertices < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  }
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") out of range");
    }
    if (u == v) {
      throw Error(ErrorCode::kInvalidArgument,
                  "self-loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

bool Graph::HasEdge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

int Graph::MaxDegree() const {
  std::vector<int> degree(num_vertices_, 0);
  for (const auto& [u, v] : edges_) {
    ++degree[u];
    ++degree[v];
  }
  return degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
}

Graph CompleteGraph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

Graph PathGraph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph RandomGraph(int n, double p, uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "edge probability must be in [0,1]");
  }
  RandomStream rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.Uniform() < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

Graph ReadEdgeList(std::istream& in, int num_vertices) {
  std::vector<std::pair<int, int>> edges;
  std::string line;
  int max_vertex = -1;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    int u = 0;
    int v = 0;
    std::string rest;
    if (!(fields >> u >> v) || (fields >> rest)) {
      throw Error(ErrorCode::kParseError,
                  "edge list line " + std::to_string(line_number) +
                      ": expected \"u v\"");
    }
    edges.emplace_back(u, v);
    max_vertex = std::max({max_vertex, u, v});
  }
  return Graph(num_vertices >= 0 ? num_vertices : max_vertex + 1,
               std::move(edges));
}

PipInstance MisToPip(const Graph& graph) {
  const int n = graph.num_vertices();
  const double off = 1.0 / static_cast<double>(n);
  std::vector<Triplet> triplets;
  triplets.reserve(n + 2 * graph.edges().size());
  for (int v = 0; v < n; ++v) triplets.push_back({v, v, 1.0});
  for (const auto& [u, v] : graph.edges()) {
    triplets.push_back({u, v, off});
    triplets.push_back({v, u, off});
  }
  return PipInstance::FromTriplets(n, n, std::vector<double>(n, 1.0), triplets,
                                   std::vector<double>(n, 1.0));
}

PipInstance RandomInstance(int n, int m, double target_width, double density,
                           uint64_t seed) {
  RequireCounts(n, m);
  RequireWidth(target_width);
  if (!(density > 0.0 && density <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "density must be in (0, 1]");
  }
  RandomStream rng(seed);
  std::vector<std::vector<double>> dense(m, std::vector<double>(n, 0.0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (rng.Uniform() < density) dense[i][j] = UnitOpenClosed(rng);
    }
  }
  for (int j = 0; j < n; ++j) dense[rng.Below(m)][j] = 1.0;
  std::vector<double> c = RandomObjective(n, rng);
  return PipInstance::FromDense(std::move(c), dense,
                                std::vector<double>(m, target_width));
}

PipInstance SparseColumnInstance(int n, int m, double target_width,
                                 int column_nnz, uint64_t seed) {
  RequireCounts(n, m);
  RequireWidth(target_width);
  if (column_nnz < 1 || column_nnz > m) {
    throw Error(ErrorCode::kInvalidArgument, "need 1 <= column_nnz <= m");
  }
  RandomStream rng(seed);
  std::vector<Triplet> triplets;
  std::vector<int> rows(m);
  for (int j = 0; j < n; ++j) {
    std::iota(rows.begin(), rows.end(), 0);
    // Partial Fisher-Yates: the first column_nnz slots are a uniform sample.
    for (int k = 0; k < column_nnz; ++k) {
      const int pick = k + static_cast<int>(rng.Below(m - k));
      std::swap(rows[k], rows[pick]);
    }
    for (int k = 0; k < column_nnz; ++k) {
      triplets.push_back({rows[k], j, k == 0 ? 1.0 : UnitOpenClosed(rng)});
    }
  }
  std::vector<double> c = RandomObjective(n, rng);
  return PipInstance::FromTriplets(n, m, std::move(c), triplets,
                                   std::vector<double>(m, target_width));
}

PipInstance MixedWidthInstance(int n, int m, double eps, double density,
                               uint64_t seed) {
  RequireCounts(n, m);
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw Error(ErrorCode::kEpsOutOfRange, "eps must be in (0, 1]");
  }
  if (!(density > 0.0 && density <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "density must be in (0, 1]");
  }
  RandomStream rng(seed);
  const double half = eps / 2.0;
  std::vector<std::vector<double>> dense(m, std::vector<double>(n, 0.0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!(rng.Uniform() < density)) continue;
      const double u = UnitOpenClosed(rng);
      dense[i][j] = rng.Uniform() < 0.5 ? half * u : half + (1.0 - half) * u;
    }
  }
  for (int j = 0; j < n; ++j) dense[rng.Below(m)][j] = 1.0;
  std::vector<double> c = RandomObjective(n, rng);
  return PipInstance::FromDense(std::move(c), dense,
                                std::vector<double>(m, 1.0 + eps));
}

KnapsackProfile ParseKnapsackProfile(std::string_view name) {
  if (name == "uniform") return KnapsackProfile::kUniform;
  if (name == "small" || name == "smallItems") return KnapsackProfile::kSmallItems;
  if (name == "mixed" || name == "mixedBigSmall") {
    return KnapsackProfile::kMixedBigSmall;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown knapsack profile \"" + std::string(name) + "\"");
}

PipInstance KnapsackInstance(int n, double width, KnapsackProfile profile,
                             uint64_t seed) {
  RequireCounts(n, 1);
  RequireWidth(width);
  if (profile != KnapsackProfile::kUniform && !(width > 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "small and mixed knapsack profiles need W > 1");
  }
  RandomStream rng(seed);
  const double eps = std::min(width - 1.0, 1.0);
  const double half = eps / 2.0;
  std::vector<double> sizes(n);
  switch (profile) {
    case KnapsackProfile::kUniform:
      for (double& s : sizes) s = UnitOpenClosed(rng);
      sizes[rng.Below(n)] = 1.0;
      break;
    case KnapsackProfile::kSmallItems:
      for (double& s : sizes) s = half * UnitOpenClosed(rng);
      break;
    case KnapsackProfile::kMixedBigSmall:
      for (int j = 0; j < n; ++j) {
        const double u = UnitOpenClosed(rng);
        sizes[j] = (j % 2 == 0) ? half + (1.0 - half) * u : half * u;
      }
      sizes[0] = 1.0;
      break;
  }
  std::vector<double> c = RandomObjective(n, rng);
  return PipInstance::FromDense(std::move(c), {sizes}, {width});
}

}  // namespace pipround
