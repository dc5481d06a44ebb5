// Copyright 2026 The ldechain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "ldechain/aklt.hpp"
#include "ldechain/fit.hpp"

using namespace lde;

namespace {

std::vector<FitPoint> synthetic(double a, double b, double xi, bool alternating, std::vector<int> lengths) {
  std::vector<FitPoint> out;
  for (int L : lengths) {
    const double sign = alternating && (L % 2) ? -1.0 : 1.0;
    out.push_back({L, a + b * sign * std::exp(-L / xi)});
  }
  return out;
}

}  // namespace

TEST(Fit, RecoversExactExponential) {
  for (auto [a, b, xi] : {std::tuple{-0.283, 0.4, 6.0}, std::tuple{1.5, -2.0, 2.5}, std::tuple{0.0, 0.1, 0.9}}) {
    const auto pts = synthetic(a, b, xi, false, {8, 10, 12, 14, 16});
    const auto f = fit_exponential(pts);
    EXPECT_NEAR(f.asymptote, a, 1e-8);
    EXPECT_NEAR(f.amplitude, b, 1e-8 * std::max(1.0, std::abs(b)) * 10);
    EXPECT_NEAR(f.decay_length, xi, 1e-8 * xi * 10);
    EXPECT_LT(f.rms_residual, 1e-10);
    EXPECT_FALSE(f.alternating);
  }
}

TEST(Fit, RecoversAlternatingExponential) {
  const auto pts = synthetic(-0.4, 0.8, 1.3, true, {5, 6, 7, 8, 9, 10});
  const auto f = fit_exponential(pts, true);
  EXPECT_TRUE(f.alternating);
  EXPECT_NEAR(f.asymptote, -0.4, 1e-8);
  EXPECT_NEAR(f.amplitude, 0.8, 1e-7);
  EXPECT_NEAR(f.decay_length, 1.3, 1e-7);
}

TEST(Fit, AkltFormulaData) {
  std::vector<FitPoint> pts;
  for (int L : {6, 8, 10, 12}) pts.push_back({L, aklt::end_correlator(L).zz});
  const auto f = fit_exponential(pts);
  EXPECT_NEAR(f.asymptote, -4.0 / 9.0, 1e-3);
  EXPECT_NEAR(f.decay_length, 1.0 / std::log(3.0), 0.05);
}

TEST(Fit, ConstantDataIsDegenerate) {
  std::vector<FitPoint> pts{{4, 0.7}, {6, 0.7}, {8, 0.7}, {10, 0.7}};
  const auto f = fit_exponential(pts);
  EXPECT_DOUBLE_EQ(f.asymptote, 0.7);
  EXPECT_EQ(f.amplitude, 0.0);
  EXPECT_EQ(f.decay_length, kMinDecayLength);
  EXPECT_EQ(f.rms_residual, 0.0);
}

TEST(Fit, DecayLengthStaysInSearchRange) {
  // nearly linear data pushes the decay length to the upper edge
  std::vector<FitPoint> pts{{4, 1.0}, {6, 2.0}, {8, 3.0}, {10, 4.0}, {12, 5.0}};
  const auto f = fit_exponential(pts);
  EXPECT_GT(f.decay_length, 0.0);
  EXPECT_LE(f.decay_length, kMaxDecayLength);
  EXPECT_GE(f.decay_length, kMinDecayLength);
  EXPECT_GT(f.rms_residual, 0.0);
}

TEST(Fit, InputErrors) {
  std::vector<FitPoint> three{{4, 1.0}, {6, 2.0}, {8, 3.0}};
  EXPECT_THROW(fit_exponential(three), std::invalid_argument);
  std::vector<FitPoint> dup{{4, 1.0}, {6, 2.0}, {8, 3.0}, {8, 3.1}};
  EXPECT_THROW(fit_exponential(dup), std::invalid_argument);
  std::vector<FitPoint> nan{{4, 1.0}, {6, 2.0}, {8, std::nan("")}, {10, 3.1}};
  EXPECT_THROW(fit_exponential(nan), std::invalid_argument);
}
