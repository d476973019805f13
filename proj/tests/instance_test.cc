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

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "pipround/error.h"
#include "pipround/generators.h"
#include "pipround/instance_io.h"
#include "support/oracles.h"
#include "support/test_util.h"

namespace pipround {
namespace {

using pipround_test::DenseWidth;
using pipround_test::ToDenseProblem;

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kInvalidArgument;
}

TEST(ValidateTest, ReportsNegativeEntryWithCoordinates) {
  PipInstance inst =
      PipInstance::FromDense({1, 1}, {{1.0, -0.5}, {0.3, 1.0}}, {1, 1});
  const std::vector<Violation> v = Validate(inst);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(ToString(v[0]), "NegativeEntry(0,1)");
  EXPECT_FALSE(IsValid(v));
}

TEST(ValidateTest, ValidTwoByTwoHasNoViolations) {
  PipInstance inst = PipInstance::FromDense({1, 2}, {{1, 0.5}, {0.2, 1}}, {1, 3});
  EXPECT_TRUE(Validate(inst).empty());
}

TEST(ValidateTest, ReportsNonpositiveCapacity) {
  PipInstance inst = PipInstance::FromDense({1, 1}, {{1, 0.5}, {0.5, 1}}, {0, 1});
  const std::vector<Violation> v = Validate(inst);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(ToString(v[0]), "NonpositiveCapacity(0)");
}

TEST(ValidateTest, ReportsEveryKind) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  PipInstance inst = PipInstance::FromDense(
      {-1, std::numeric_limits<double>::infinity(), 1},
      {{nan, 1, 0}, {0.5, 1, 0}}, {1, -2});
  const std::vector<Violation> v = Validate(inst);
  std::vector<std::string> names;
  for (const Violation& x : v) names.push_back(ToString(x));
  EXPECT_EQ(names, (std::vector<std::string>{
                       "NegativeObjective(0)", "NonFiniteObjective(1)",
                       "NonpositiveCapacity(1)", "NonFiniteEntry(0,0)",
                       "EmptyColumn(2) [warning]"}));
}

TEST(ValidateTest, EmptyColumnIsOnlyAWarning) {
  PipInstance inst = PipInstance::FromDense({1, 1}, {{1, 0}}, {1});
  const std::vector<Violation> v = Validate(inst);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_TRUE(v[0].is_warning());
  EXPECT_TRUE(IsValid(v));
  EXPECT_EQ(inst.EmptyColumns(), std::vector<int>{1});
}

TEST(ValidateTest, EmptyProblem) {
  PipInstance inst = PipInstance::FromDense({}, {}, {});
  const std::vector<Violation> v = Validate(inst);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].kind, ViolationKind::kEmptyProblem);
}

TEST(InstanceTest, TripletsRejectDuplicatesAndOutOfRange) {
  const std::vector<Triplet> dup{{0, 0, 1.0}, {0, 0, 0.5}};
  EXPECT_EQ(CodeOf([&] { PipInstance::FromTriplets(1, 1, {1}, dup, {1}); }),
            ErrorCode::kInvalidInstance);
  const std::vector<Triplet> out{{0, 3, 1.0}};
  EXPECT_EQ(CodeOf([&] { PipInstance::FromTriplets(2, 1, {1, 1}, out, {1}); }),
            ErrorCode::kInvalidInstance);
}

TEST(InstanceTest, DenseAndTripletFormsAgree) {
  PipInstance d = PipInstance::FromDense({1, 2, 3}, {{0, 0.5, 1}, {2, 0, 0}}, {2, 4});
  const std::vector<Triplet> t = d.ToTriplets();
  PipInstance s = PipInstance::FromTriplets(3, 2, {1, 2, 3}, t, {2, 4});
  EXPECT_EQ(d.ToDense(), s.ToDense());
  EXPECT_EQ(d.num_nonzeros(), 3);
  EXPECT_DOUBLE_EQ(d.coefficient(1, 0), 2.0);
  EXPECT_DOUBLE_EQ(d.coefficient(1, 1), 0.0);
}

TEST(InstanceTest, LoadsValueAndFeasibility) {
  PipInstance inst = PipInstance::FromDense({1, 2}, {{1, 1}}, {1});
  const std::vector<uint8_t> both{1, 1};
  const std::vector<uint8_t> one{0, 1};
  EXPECT_FALSE(inst.IsFeasible(std::span<const uint8_t>(both)));
  EXPECT_TRUE(inst.IsFeasible(std::span<const uint8_t>(one)));
  EXPECT_DOUBLE_EQ(inst.ObjectiveValue(std::span<const uint8_t>(both)), 3.0);
  const std::vector<double> half{0.5, 0.5};
  EXPECT_DOUBLE_EQ(inst.RowLoads(std::span<const double>(half))[0], 1.0);
}

TEST(WidthTest, SpecExamples) {
  EXPECT_DOUBLE_EQ(WidthOf(PipInstance::FromDense({1}, {{0.5}}, {1})), 2.0);
  EXPECT_DOUBLE_EQ(WidthOf(PipInstance::FromDense({1, 1}, {{1, 0.25}}, {1})), 1.0);
  EXPECT_DOUBLE_EQ(
      WidthOf(PipInstance::FromDense({1, 1}, {{0.2, 0.1}, {0.5, 0}}, {1, 2})), 4.0);
}

TEST(WidthTest, AllZeroMatrixThrows) {
  PipInstance inst = PipInstance::FromDense({1}, {{0}}, {1});
  EXPECT_EQ(CodeOf([&] { WidthOf(inst); }), ErrorCode::kAllZeroMatrix);
  EXPECT_EQ(CodeOf([&] { Normalize(inst); }), ErrorCode::kAllZeroMatrix);
}

TEST(NormalizeTest, AlreadyNormalized) {
  NormalizedInstance n = Normalize(PipInstance::FromDense({1}, {{1}}, {1}));
  EXPECT_DOUBLE_EQ(n.width, 1.0);
  EXPECT_EQ(n.delta0, 1);
  EXPECT_DOUBLE_EQ(n.delta1, 1.0);
  EXPECT_DOUBLE_EQ(n.base.coefficient(0, 0), 1.0);
}

TEST(NormalizeTest, TwoByTwoExample) {
  NormalizedInstance n =
      Normalize(PipInstance::FromDense({1, 1}, {{2, 1}, {1, 4}}, {4, 8}));
  EXPECT_DOUBLE_EQ(n.width, 2.0);
  const std::vector<std::vector<double>> expected{{1, 0.5}, {0.25, 1}};
  EXPECT_EQ(n.base.ToDense(), expected);
  EXPECT_EQ(n.base.capacity(), (std::vector<double>{2, 2}));
  EXPECT_DOUBLE_EQ(n.delta1, 1.5);
  EXPECT_EQ(n.delta0, 2);
}

TEST(NormalizeTest, MisTriangle) {
  NormalizedInstance n = Normalize(MisToPip(CompleteGraph(3)));
  EXPECT_DOUBLE_EQ(n.width, 1.0);
  EXPECT_NEAR(n.delta1, 1.0 + 2.0 / 3.0, 1e-12);
}

TEST(NormalizeTest, Errors) {
  EXPECT_EQ(CodeOf([] { Normalize(PipInstance::FromDense({1}, {{2}}, {1})); }),
            ErrorCode::kWidthBelowOne);
  EXPECT_EQ(CodeOf([] { Normalize(PipInstance::FromDense({1}, {{-1}}, {1})); }),
            ErrorCode::kInvalidInstance);
}

TEST(NormalizeTest, WidthBelowOneMessageSuggestsDroppingItems) {
  try {
    Normalize(PipInstance::FromDense({1, 1}, {{2, 0.5}}, {1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("A_ij > b_i"), std::string::npos);
  }
}

// Raw instances with arbitrary positive capacities, drawn with a generator
// unrelated to the library's.
PipInstance RawRandom(std::mt19937_64& rng, int n, int m) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::vector<double>> a(m, std::vector<double>(n, 0.0));
  for (auto& row : a) {
    for (double& v : row) v = u(rng) < 0.6 ? 0.1 + 3.0 * u(rng) : 0.0;
  }
  a[0][0] = 1.0;
  std::vector<double> b(m);
  for (int i = 0; i < m; ++i) {
    double mx = 0.0;
    for (double v : a[i]) mx = std::max(mx, v);
    b[i] = std::max(mx, 1e-3) * (1.0 + 4.0 * u(rng));
  }
  std::vector<double> c(n);
  for (double& v : c) v = u(rng);
  return PipInstance::FromDense(c, a, b);
}

TEST(NormalizeProperty, InvariantsOnRandomInstances) {
  std::mt19937_64 rng(42);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const int m = 1 + static_cast<int>(rng() % 6);
    const PipInstance raw = RawRandom(rng, n, m);
    const NormalizedInstance norm = Normalize(raw);
    const double w = DenseWidth(ToDenseProblem(raw));
    EXPECT_NEAR(norm.width, w, 1e-12);
    EXPECT_NEAR(WidthOf(norm.base), w, 1e-12);
    double max_entry = 0.0;
    for (int i = 0; i < m; ++i) {
      EXPECT_NEAR(norm.base.capacity()[i], norm.width, 1e-12);
      for (const MatrixEntry& e : norm.base.row(i)) {
        EXPECT_GE(e.value, 0.0);
        EXPECT_LE(e.value, 1.0);
        max_entry = std::max(max_entry, e.value);
      }
    }
    EXPECT_NEAR(max_entry, 1.0, 1e-12);
    EXPECT_GE(norm.delta1, 1.0 - 1e-12);
    EXPECT_LE(norm.delta1, norm.delta0 + 1e-12);

    // Idempotence.
    const NormalizedInstance again = Normalize(norm.base);
    EXPECT_NEAR(again.width, norm.width, 1e-12);
    const auto d1 = norm.base.ToDense();
    const auto d2 = again.base.ToDense();
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) EXPECT_NEAR(d1[i][j], d2[i][j], 1e-12);
    }
  }
}

TEST(NormalizeProperty, BooleanFeasibilityPreservedExhaustively) {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 4 + static_cast<int>(rng() % 9);  // up to 12
    const int m = 1 + static_cast<int>(rng() % 4);
    const PipInstance raw = RawRandom(rng, n, m);
    const NormalizedInstance norm = Normalize(raw);
    const auto p_raw = ToDenseProblem(raw);
    const auto p_norm = ToDenseProblem(norm.base);
    std::vector<int> x(n);
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      for (int j = 0; j < n; ++j) x[j] = (mask >> j) & 1;
      // Scaling perturbs loads by a few ulps; compare with zero tolerance
      // on one side and the library tolerance on the other.
      const bool raw_ok = pipround_test::DenseFeasible(p_raw, x, 1e-9);
      const bool norm_ok = pipround_test::DenseFeasible(p_norm, x, 1e-9);
      ASSERT_EQ(raw_ok, norm_ok) << "rep " << rep << " mask " << mask;
    }
  }
}

TEST(InstanceIoTest, RoundTripsBothLayouts) {
  const PipInstance inst = RandomInstance(7, 3, 2.5, 0.5, 99);
  for (MatrixLayout layout : {MatrixLayout::kDense, MatrixLayout::kSparse}) {
    const PipInstance back = ParseInstanceJson(InstanceToJson(inst, layout));
    EXPECT_EQ(back.ToDense(), inst.ToDense());
    EXPECT_EQ(back.objective(), inst.objective());
    EXPECT_EQ(back.capacity(), inst.capacity());
  }
}

TEST(InstanceIoTest, ParsesBothForms) {
  const PipInstance dense = ParseInstanceJson(
      R"({"n":2,"m":1,"c":[1,2],"b":[3],"A":{"dense":[[1,0.5]]},"meta":{"x":1}})");
  const PipInstance sparse = ParseInstanceJson(
      R"({"n":2,"m":1,"c":[1,2],"b":[3],"A":{"sparse":[[0,0,1],[0,1,0.5]]}})");
  EXPECT_EQ(dense.ToDense(), sparse.ToDense());
}

TEST(InstanceIoTest, Errors) {
  EXPECT_EQ(CodeOf([] { ParseInstanceJson("{not json"); }), ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] {
              ParseInstanceJson(R"({"n":2,"m":1,"c":[1],"b":[3],"A":{"dense":[[1,1]]}})");
            }),
            ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] {
              ParseInstanceJson(
                  R"({"n":1,"m":1,"c":[1],"b":[3],"A":{"sparse":[[0,0,1],[0,0,2]]}})");
            }),
            ErrorCode::kInvalidInstance);
  EXPECT_EQ(CodeOf([] {
              ParseInstanceJson(R"({"n":1,"m":1,"c":[1],"b":[3],"A":{}})");
            }),
            ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { ReadInstanceFile("/nonexistent/instance.json"); }),
            ErrorCode::kParseError);
}

}  // namespace
}  // namespace pipround
