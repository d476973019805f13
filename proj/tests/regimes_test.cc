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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "pipround/error.h"
#include "pipround/instance.h"

namespace pipround {
namespace {

// Reference decimals evaluated at 30 significant digits.
constexpr double kC1 = 15.7080575789665796397118140891;
constexpr double kC2 = 22.6929259432238941884176913601;
constexpr double kC3 = 45.3858518864477883768353827202;

ErrorCode CodeOf(auto f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kInvalidArgument;
}

// A = column 0 repeated in `rows` rows with coefficient 1, b = width.
NormalizedInstance Column(int rows, double width) {
  std::vector<std::vector<double>> a(rows, std::vector<double>{1.0});
  return Normalize(PipInstance::FromDense({1.0}, a, std::vector<double>(rows, width)));
}

TEST(ConstantsTest, PinnedToHighPrecisionValues) {
  EXPECT_NEAR(Constants().c1, kC1, 1e-12 * kC1);
  EXPECT_NEAR(Constants().c2, kC2, 1e-12 * kC2);
  EXPECT_NEAR(Constants().c3, kC3, 1e-12 * kC3);
  EXPECT_NEAR(Constants().c3, 2.0 * Constants().c2, 1e-12);
}

TEST(AlphaWeakTest, Examples) {
  EXPECT_NEAR(AlphaWeak(1.0), 0.063661595010895624, 1e-15);
  EXPECT_NEAR(AlphaWeak(2.0), AlphaWeak(1.0) / 2.0, 1e-16);
  EXPECT_NEAR(AlphaWeak(10.0), 0.0063661595010895624, 1e-16);
}

TEST(AlphaStrongTest, Examples) {
  EXPECT_NEAR(AlphaStrong(1.0, 1e9), 0.044066596017716257, 1e-9);
  EXPECT_NEAR(AlphaStrong(2.0, 2.0), 0.022033298008858129, 1e-15);
  // W = 3, D1 = 5: (1 + 5/3)^(1/2).
  EXPECT_NEAR(AlphaStrong(5.0, 3.0), 0.026985168736191504, 1e-15);
}

TEST(AlphaStrongTest, NondecreasingInWidth) {
  for (double d1 = 1.0; d1 <= 1000.0; d1 *= 1.5) {
    double prev = 0.0;
    for (double w = 2.0; w <= 1e4; w *= 1.05) {
      const double a = AlphaStrong(d1, w);
      ASSERT_GE(a, prev - 1e-16) << "d1=" << d1 << " W=" << w;
      prev = a;
    }
  }
}

// alphaStrong >= alphaWeak * c1/c2 is the same as (1 + D1/W)^(1/(W-1)) <= D1,
// which holds for every W >= 2 once D1 >= 2. Below D1 = 2 it fails near
// W = 2 (and for D1 = 1 at every W, since the left side exceeds 1).
TEST(AlphaStrongTest, ImprovesOnWeakScaledByConstantRatio) {
  const double ratio = Constants().c1 / Constants().c2;
  for (double d1 = 2.0; d1 <= 1000.0; d1 *= 1.3) {
    for (double w = 2.0; w <= 1e4; w *= 1.1) {
      ASSERT_GE(AlphaStrong(d1, w), AlphaWeak(d1) * ratio * (1.0 - 1e-12))
          << "d1=" << d1 << " W=" << w;
    }
  }
  EXPECT_LT(AlphaStrong(1.0, 2.0), AlphaWeak(1.0) * ratio);
  EXPECT_LT(AlphaStrong(1.5, 2.0), AlphaWeak(1.5) * ratio);
}

TEST(AlphaLargeWTest, Examples) {
  EXPECT_DOUBLE_EQ(AlphaLargeW(0.1), 0.9);
  EXPECT_DOUBLE_EQ(AlphaLargeW(0.25), 0.75);
  EXPECT_EQ(CodeOf([] { AlphaLargeW(1.0 / std::numbers::e); }),
            ErrorCode::kEpsOutOfRange);
  EXPECT_EQ(CodeOf([] { AlphaLargeW(0.0); }), ErrorCode::kEpsOutOfRange);
}

TEST(AlphaSmallWidthTest, Examples) {
  EXPECT_NEAR(AlphaSmallWidth(1.0, 1.0), 0.022033298008858129, 1e-15);
  EXPECT_NEAR(AlphaSmallWidth(0.5, 2.0), 0.0027541622511072661, 1e-16);
  // Quadratic in eps.
  for (double eps = 1.0; eps > 1e-6; eps /= 2.0) {
    EXPECT_NEAR(AlphaSmallWidth(eps / 2.0, 3.0) / AlphaSmallWidth(eps, 3.0), 0.25, 1e-12);
  }
  EXPECT_EQ(CodeOf([] { AlphaSmallWidth(0.0, 1.0); }), ErrorCode::kEpsOutOfRange);
  EXPECT_EQ(CodeOf([] { AlphaSmallWidth(1.1, 1.0); }), ErrorCode::kEpsOutOfRange);
}

TEST(RequiredWidthTest, Examples) {
  EXPECT_NEAR(RequiredWidthLargeW(0.25, 2.0), 67.54212933375475, 1e-11);
  EXPECT_NEAR(RequiredWidthLargeW(0.2, 1.0), 81.47189562170502, 1e-11);
  // D1/eps below e: still finite and positive.
  EXPECT_GT(RequiredWidthLargeW(0.36, 0.5), 0.0);
}

TEST(AlphaRangeTest, AllAlphasInOpenUnitInterval) {
  for (double d1 = 1.0; d1 <= 1000.0; d1 *= 2.0) {
    EXPECT_GT(AlphaWeak(d1), 0.0);
    EXPECT_LT(AlphaWeak(d1), 1.0);
    for (double w = 2.0; w <= 1e4; w *= 3.0) {
      EXPECT_GT(AlphaStrong(d1, w), 0.0);
      EXPECT_LT(AlphaStrong(d1, w), 1.0);
    }
    for (double eps = 0.01; eps <= 1.0; eps += 0.01) {
      EXPECT_GT(AlphaSmallWidth(eps, d1), 0.0);
      EXPECT_LT(AlphaSmallWidth(eps, d1), 1.0);
    }
  }
  for (double eps = 0.01; eps < 1.0 / std::numbers::e; eps += 0.01) {
    EXPECT_GT(AlphaLargeW(eps), 0.0);
    EXPECT_LT(AlphaLargeW(eps), 1.0);
  }
}

TEST(SelectRegimeTest, Examples) {
  // W = 3, D1 = 5.
  std::vector<std::vector<double>> a(5, std::vector<double>{1.0, 0.0});
  a[0][1] = 0.5;
  const NormalizedInstance w3 =
      Normalize(PipInstance::FromDense({1, 1}, a, std::vector<double>(5, 3.0)));
  ASSERT_DOUBLE_EQ(w3.width, 3.0);
  ASSERT_DOUBLE_EQ(w3.delta1, 5.0);
  EXPECT_EQ(SelectRegime(w3).regime, Regime::kStrongW2);

  const RegimeConfig small = SelectRegime(Column(1, 1.4));
  EXPECT_EQ(small.regime, Regime::kSmallWidth);
  EXPECT_NEAR(small.eps, 0.4, 1e-12);

  const NormalizedInstance w100 = Column(2, 100.0);
  ASSERT_DOUBLE_EQ(w100.delta1, 2.0);
  const RegimeConfig large = SelectRegime(w100, 0.25);
  EXPECT_EQ(large.regime, Regime::kLargeW);
  EXPECT_DOUBLE_EQ(large.alpha, 0.75);
  EXPECT_NEAR(large.gamma, std::numbers::e * 0.25, 1e-15);
  // Without the hint the same instance is StrongW2.
  EXPECT_EQ(SelectRegime(w100).regime, Regime::kStrongW2);
  // A hint whose width requirement fails falls back to StrongW2.
  EXPECT_EQ(SelectRegime(Column(2, 50.0), 0.25).regime, Regime::kStrongW2);
}

TEST(SelectRegimeTest, WidthOneRefusedWithHardnessMessage) {
  try {
    SelectRegime(Column(1, 1.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWidthOne);
    EXPECT_NE(std::string(e.what()).find("independent set"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("--force-heuristic"), std::string::npos);
  }
}

TEST(SelectRegimeTest, WidthTwoPrefersStrongOverSmallWidth) {
  for (double d1 : {1.0, 1.5, 2.0, 5.0, 100.0}) {
    EXPECT_GT(AlphaStrong(d1, 2.0), AlphaSmallWidth(1.0, d1)) << d1;
  }
  EXPECT_EQ(SelectRegime(Column(3, 2.0)).regime, Regime::kStrongW2);
  // SmallWidth with eps = 1 is still available explicitly.
  EXPECT_DOUBLE_EQ(ConfigFor(Regime::kSmallWidth, Column(3, 2.0)).eps, 1.0);
}

TEST(SelectRegimeTest, DeterministicAndTotalAboveOne) {
  for (double w = 1.01; w < 200.0; w *= 1.07) {
    const NormalizedInstance inst = Column(2, w);
    const RegimeConfig a = SelectRegime(inst, 0.25);
    const RegimeConfig b = SelectRegime(inst, 0.25);
    EXPECT_EQ(a.regime, b.regime);
    EXPECT_EQ(a.alpha, b.alpha);
    EXPECT_TRUE(IsConsistent(a, inst));
  }
}

TEST(ConfigForTest, Mismatches) {
  EXPECT_EQ(CodeOf([] { ConfigFor(Regime::kWeakW2, Column(1, 1.5)); }),
            ErrorCode::kRegimeMismatch);
  EXPECT_EQ(CodeOf([] { ConfigFor(Regime::kStrongW2, Column(1, 1.0)); }),
            ErrorCode::kRegimeMismatch);
  EXPECT_EQ(CodeOf([] { ConfigFor(Regime::kLargeW, Column(2, 3.0), 0.25); }),
            ErrorCode::kRegimeMismatch);
  EXPECT_EQ(CodeOf([] { ConfigFor(Regime::kSmallWidth, Column(1, 3.0)); }),
            ErrorCode::kRegimeMismatch);
  EXPECT_EQ(CodeOf([] { ConfigFor(Regime::kSmallWidth, Column(1, 1.0)); }),
            ErrorCode::kRegimeMismatch);
  EXPECT_EQ(CodeOf([] { ConfigFor(Regime::kLargeW, Column(1, 1e6), 0.5); }),
            ErrorCode::kEpsOutOfRange);
}

TEST(ConfigForTest, FieldsPerRegime) {
  const NormalizedInstance w4 = Column(2, 4.0);
  const RegimeConfig weak = ConfigFor(Regime::kWeakW2, w4);
  EXPECT_DOUBLE_EQ(weak.alpha, AlphaWeak(2.0));
  EXPECT_DOUBLE_EQ(weak.gamma, 0.5);
  EXPECT_FALSE(weak.heuristic);
  const RegimeConfig strong = ConfigFor(Regime::kStrongW2, w4);
  EXPECT_DOUBLE_EQ(strong.alpha, AlphaStrong(2.0, 4.0));
  const RegimeConfig small = ConfigFor(Regime::kSmallWidth, Column(2, 1.5));
  EXPECT_DOUBLE_EQ(small.alpha, AlphaSmallWidth(0.5, 2.0));
  EXPECT_DOUBLE_EQ(small.gamma, 0.5);
}

TEST(HeuristicTest, FlagsAndConsistency) {
  const NormalizedInstance w1 = Column(2, 1.0);
  const RegimeConfig h = HeuristicConfig(w1);
  EXPECT_TRUE(h.heuristic);
  EXPECT_DOUBLE_EQ(h.alpha, AlphaWeak(2.0));
  EXPECT_FALSE(IsConsistent(h, w1));
  const RegimeConfig stressed = WithAlpha(ConfigFor(Regime::kWeakW2, Column(2, 4.0)), 1.0);
  EXPECT_TRUE(stressed.heuristic);
  EXPECT_DOUBLE_EQ(stressed.alpha, 1.0);
  EXPECT_EQ(CodeOf([&] { WithAlpha(h, 0.0); }), ErrorCode::kInvalidArgument);
}

TEST(RegimeNameTest, RoundTrip) {
  for (Regime r : {Regime::kWeakW2, Regime::kStrongW2, Regime::kLargeW, Regime::kSmallWidth}) {
    EXPECT_EQ(ParseRegime(RegimeName(r)), r);
  }
  EXPECT_EQ(CodeOf([] { ParseRegime("auto"); }), ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace pipround
