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


#ifndef PIPROUND_TESTS_SUPPORT_TEST_UTIL_H_
#define PIPROUND_TESTS_SUPPORT_TEST_UTIL_H_

#include <string>
#include <vector>

#include "pipround/generators.h"
#include "pipround/instance.h"
#include "support/oracles.h"

namespace pipround_test {

inline DenseProblem ToDenseProblem(const pipround::PipInstance& inst) {
  DenseProblem p;
  p.c = inst.objective();
  p.b = inst.capacity();
  p.a.assign(inst.num_rows(), std::vector<double>(inst.num_cols(), 0.0));
  for (int i = 0; i < inst.num_rows(); ++i) {
    for (int j = 0; j < inst.num_cols(); ++j) p.a[i][j] = inst.coefficient(i, j);
  }
  return p;
}

inline std::vector<int> ToInts(const std::vector<uint8_t>& x) {
  return std::vector<int>(x.begin(), x.end());
}

struct SuiteInstance {
  std::string name;
  pipround::PipInstance instance;
};

// The 30-instance suite shared by the feasibility and oracle checks. It
// covers every generator and every width class: W = 1 (MIS), 1 < W < 2,
// W >= 2 and widths large enough for the LargeW regime at eps = 0.25.
inline std::vector<SuiteInstance> StandardSuite() {
  using namespace pipround;
  std::vector<SuiteInstance> s;
  auto add = [&](std::string name, PipInstance inst) {
    s.push_back({std::move(name), std::move(inst)});
  };
  add("random-8x3-w2", RandomInstance(8, 3, 2.0, 0.6, 1));
  add("random-10x4-w2", RandomInstance(10, 4, 2.0, 0.5, 2));
  add("random-12x5-w3", RandomInstance(12, 5, 3.0, 0.5, 3));
  add("random-12x6-w4", RandomInstance(12, 6, 4.0, 0.7, 4));
  add("random-20x8-w2", RandomInstance(20, 8, 2.0, 0.4, 5));
  add("random-40x15-w3", RandomInstance(40, 15, 3.0, 0.3, 6));
  add("random-60x30-w4", RandomInstance(60, 30, 4.0, 0.2, 7));
  add("random-30x10-w8", RandomInstance(30, 10, 8.0, 0.5, 8));
  add("random-100x20-w16", RandomInstance(100, 20, 16.0, 0.3, 9));
  add("sparse-12x6-w2", SparseColumnInstance(12, 6, 2.0, 2, 10));
  add("sparse-200x10-w68", SparseColumnInstance(200, 10, 68.0, 2, 11));
  add("sparse-600x10-w70", SparseColumnInstance(600, 10, 70.0, 2, 12));
  add("sparse-300x8-w100", SparseColumnInstance(300, 8, 100.0, 1, 13));
  add("mixed-10x4-e05", MixedWidthInstance(10, 4, 0.5, 0.6, 14));
  add("mixed-12x5-e03", MixedWidthInstance(12, 5, 0.3, 0.5, 15));
  add("mixed-40x10-e05", MixedWidthInstance(40, 10, 0.5, 0.4, 16));
  add("mixed-30x6-e08", MixedWidthInstance(30, 6, 0.8, 0.5, 17));
  add("mixed-20x5-e1", MixedWidthInstance(20, 5, 1.0, 0.5, 18));
  add("knapsack-uniform-12-w2", KnapsackInstance(12, 2.0, KnapsackProfile::kUniform, 19));
  add("knapsack-uniform-30-w3", KnapsackInstance(30, 3.0, KnapsackProfile::kUniform, 20));
  add("knapsack-small-10-w15", KnapsackInstance(10, 1.5, KnapsackProfile::kSmallItems, 21));
  add("knapsack-mixed-12-w15", KnapsackInstance(12, 1.5, KnapsackProfile::kMixedBigSmall, 22));
  add("knapsack-mixed-40-w14", KnapsackInstance(40, 1.4, KnapsackProfile::kMixedBigSmall, 23));
  add("mis-k6", MisToPip(CompleteGraph(6)));
  add("mis-path8", MisToPip(PathGraph(8)));
  add("mis-random10", MisToPip(RandomGraph(10, 0.4, 24)));
  add("mis-random12", MisToPip(RandomGraph(12, 0.25, 25)));
  // Hand-made corner cases: an empty column, and a single item.
  add("empty-column",
      PipInstance::FromDense({1.0, 0.5, 2.0}, {{1.0, 0.0, 0.6}, {0.3, 0.0, 1.0}},
                             {1.5, 2.0}));
  add("single-item", PipInstance::FromDense({3.0}, {{1.0}}, {2.0}));
  add("ties-w2", PipInstance::FromDense({1, 1, 1, 1, 1, 1},
                                        {{1, 1, 1, 1, 0.5, 0.5}, {0.5, 0.5, 1, 1, 1, 1}},
                                        {2.0, 2.0}));
  return s;
}

}  // namespace pipround_test

#endif  // PIPROUND_TESTS_SUPPORT_TEST_UTIL_H_
