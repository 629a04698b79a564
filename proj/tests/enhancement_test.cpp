// Copyright 2026 The uwcc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "support/table.hpp"
#include "uwcc/enhancement.hpp"

namespace uwcc {
namespace {

using testing::default_table;

// Percentile by full sort and linear interpolation between neighbours.
double sorted_percentile(std::vector<double> v, double pct) {
  std::sort(v.begin(), v.end());
  const double pos = pct / 100.0 * (v.size() - 1);
  const std::size_t i = static_cast<std::size_t>(pos);
  if (i + 1 >= v.size()) return v.back();
  return v[i] + (pos - i) * (v[i + 1] - v[i]);
}

Plane<double> ramp(double lo, double hi, int n) {
  Plane<double> p(1, n);
  for (int i = 0; i < n; ++i) p(0, i) = lo + (hi - lo) * i / (n - 1);
  return p;
}

void expect_stretch_matches_oracle(const Plane<double>& L) {
  const EnhanceParams p;
  std::vector<double> v(L.data(), L.data() + L.size());
  const double lo = sorted_percentile(v, 1), hi = sorted_percentile(v, 99);
  const Plane<double> out = stretch_lightness(L, p);
  for (Eigen::Index i = 0; i < L.size(); ++i) {
    const double expect = std::clamp(5 + (L(i) - lo) * 90 / (hi - lo), 0.0, 100.0);
    ASSERT_NEAR(out(i), expect, 1e-9);
  }
}

TEST(Percentile, MatchesSortedOracle) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0, 100);
  std::vector<double> v(999);
  for (double& x : v) x = u(rng);
  for (double pct : {0.0, 1.0, 12.5, 50.0, 99.0, 100.0}) {
    EXPECT_NEAR(percentile(v, pct), sorted_percentile(v, pct), 1e-12) << pct;
  }
}

TEST(StretchLightness, ConstantPlaneUnchanged) {
  const Plane<double> L = Plane<double>::Constant(4, 5, 37.0);
  EXPECT_TRUE((stretch_lightness(L, EnhanceParams{}) == L).all());
}

TEST(StretchLightness, NarrowRampSpreads) {
  const Plane<double> L = ramp(40, 60, 1001);
  expect_stretch_matches_oracle(L);
  const Plane<double> out = stretch_lightness(L, EnhanceParams{});
  EXPECT_NEAR(out(0, 10), 5.0, 1e-9);
  EXPECT_NEAR(out(0, 990), 95.0, 1e-9);
  EXPECT_NEAR(out.minCoeff(), 5.0, 1.0);
  EXPECT_NEAR(out.maxCoeff(), 95.0, 1.0);
}

TEST(StretchLightness, FullRampCompresses) {
  const Plane<double> L = ramp(0, 100, 1001);
  expect_stretch_matches_oracle(L);
  const Plane<double> out = stretch_lightness(L, EnhanceParams{});
  EXPECT_NEAR(out.minCoeff(), 5.0, 1.0);
  EXPECT_NEAR(out.maxCoeff(), 95.0, 1.0);
}

TEST(StretchLightness, OutputClamped) {
  Plane<double> L = ramp(45, 55, 200);
  L(0, 0) = 0.0;
  L(0, 199) = 100.0;
  const Plane<double> out = stretch_lightness(L, EnhanceParams{});
  EXPECT_EQ(out(0, 0), 0.0);
  EXPECT_EQ(out(0, 199), 100.0);
}

TEST(EnhanceParams, Validation) {
  EnhanceParams p;
  EXPECT_NO_THROW(p.validate());
  p.eta = 0.5;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = {};
  p.beta = 0.0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = {};
  p.stretch_lo = 99;
  p.stretch_hi = 1;
  EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(RescaleChroma, Examples) {
  const GamutTable& t = default_table();
  const double h = 130.0;
  const double cmax40 = t.max_chroma(40, h), cmax70 = t.max_chroma(70, h);
  EXPECT_NEAR(rescale_chroma(cmax40, 40, 70, h, t), cmax70, 1e-9);
  EXPECT_EQ(rescale_chroma(0.0, 40, 70, h, t), 0.0);
  EXPECT_NEAR(rescale_chroma(12.0, 40, 40, h, t), 12.0, 1e-12);
  EXPECT_NEAR(rescale_chroma(2 * cmax40, 40, 70, h, t), cmax70, 1e-9);
  EXPECT_EQ(rescale_chroma(5.0, 0.0, 70, h, t), 0.0);
}

TEST(GammaEnhance, Examples) {
  const GamutTable& t = default_table();
  const double h = 250.0, L = 60.0, cmax = t.max_chroma(L, h);
  EXPECT_NEAR(gamma_enhance_chroma(0.3 * cmax, L, h, 1.0, t), 0.3 * cmax, 1e-12);
  EXPECT_NEAR(gamma_enhance_chroma(cmax, L, h, 10.0, t), cmax, 1e-12);
  EXPECT_NEAR(gamma_enhance_chroma(0.25 * cmax, L, h, 2.0, t) / cmax, 0.5, 1e-12);
  EXPECT_EQ(gamma_enhance_chroma(5.0, 0.0, h, 2.0, t), 0.0);
}

TEST(GammaEnhance, Monotone) {
  const GamutTable& t = default_table();
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> L(1, 100), h(0, 360), frac(0, 0.999);
  for (int i = 0; i < 2000; ++i) {
    const double l = L(rng), hue = h(rng), cmax = t.max_chroma(l, hue);
    const double c1 = frac(rng) * cmax, c1b = std::min(cmax, c1 + 0.1);
    double prev = -1;
    for (double eta : {1.0, 2.0, 4.0, 10.0}) {
      const double c2 = gamma_enhance_chroma(c1, l, hue, eta, t);
      ASSERT_GE(c2, prev - 1e-12);
      ASSERT_LE(c2, cmax + 1e-12);
      ASSERT_GE(gamma_enhance_chroma(c1b, l, hue, eta, t), c2 - 1e-12);
      prev = c2;
    }
  }
}

TEST(HueDifference, Examples) {
  EXPECT_NEAR(hue_difference(2, 3, 4, 6), 0.0, 1e-12);
  EXPECT_NEAR(hue_difference(2, 3, -4, -6), 180.0, 1e-12);
  EXPECT_NEAR(hue_difference(1, 0, 0, 1), 90.0, 1e-12);
  EXPECT_NEAR(hue_difference(1, 1, 1, 0), 45.0, 1e-12);
}

TEST(HueDifference, DegenerateConventions) {
  EXPECT_EQ(hue_difference(5, 5, 0, 0), 180.0);
  EXPECT_EQ(hue_difference(0, 0, 0, 0), 180.0);
  EXPECT_EQ(hue_difference(0, 0, 3, 1), 0.0);
}

TEST(HueDifference, MatchesArccosForm) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> ab(-60, 60);
  for (int i = 0; i < 1000; ++i) {
    const double a0 = ab(rng), b0 = ab(rng), ac = ab(rng), bc = ab(rng);
    const double c = (a0 * ac + b0 * bc) / (std::hypot(a0, b0) * std::hypot(ac, bc));
    EXPECT_NEAR(hue_difference(a0, b0, ac, bc), std::acos(std::clamp(c, -1.0, 1.0)) * 180 / std::numbers::pi,
                1e-6);
  }
}

TEST(RobustFactor, Examples) {
  EXPECT_EQ(robust_factor(180, 0.25), 1.0);
  EXPECT_EQ(robust_factor(180, 1.0), 1.0);
  EXPECT_EQ(robust_factor(0, 0.25), 0.0);
  EXPECT_NEAR(robust_factor(90, 0.5), std::sqrt(0.5), 1e-12);
}

TEST(RobustFactor, MonotoneInThetaAndBeta) {
  for (double beta : {0.1, 0.25, 0.5, 1.0}) {
    for (double th = 1; th < 180; th += 1) {
      ASSERT_LT(robust_factor(th - 1, beta), robust_factor(th, beta));
    }
  }
  for (double th : {10.0, 90.0, 170.0}) {
    ASSERT_GT(robust_factor(th, 0.1), robust_factor(th, 0.25));
    ASSERT_GT(robust_factor(th, 0.25), robust_factor(th, 1.0));
  }
}

TEST(ApplyRobust, Examples) {
  EXPECT_EQ(apply_robust(6, -8, 1.0), std::make_pair(6.0, -8.0));
  EXPECT_EQ(apply_robust(6, -8, 0.0), std::make_pair(0.0, -0.0));
  const auto [a, b] = apply_robust(6, -8, 0.5);
  EXPECT_EQ(a, 3.0);
  EXPECT_EQ(b, -4.0);
  EXPECT_EQ(chroma(a, b), 5.0);
  EXPECT_NEAR(*hue_angle(a, b), *hue_angle(6.0, -8.0), 1e-12);
}

TEST(HueShiftOracle, Limits) {
  const double g = 1 - 1e-6;
  EXPECT_NEAR(hue_shift_oracle(0.5, g), 180.0, 1.0);
  EXPECT_NEAR(hue_shift_oracle(1.0, g), 90.0, 1.0);
  EXPECT_NEAR(hue_shift_oracle(2.0, g), 0.0, 1.0);
  EXPECT_NEAR(hue_shift_oracle(1.0, 0.0), 45.0, 1e-12);
}

TEST(HueShiftOracle, SingularAndDomain) {
  EXPECT_THROW(hue_shift_oracle(1.0, 1.0), std::domain_error);
  EXPECT_THROW(hue_shift_oracle(0.0, 0.5), std::invalid_argument);
  EXPECT_THROW(hue_shift_oracle(1.0, 1.5), std::invalid_argument);
  EXPECT_EQ(hue_shift_oracle(2.0, 1.0), 0.0);
  EXPECT_EQ(hue_shift_oracle(0.5, 1.0), 180.0);
}

TEST(HueShiftOracle, MatchesArccosForm) {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> rho(0.05, 5), gamma(-0.99, 0.99);
  for (int i = 0; i < 1000; ++i) {
    const double r = rho(rng), g = gamma(rng);
    const double direct = std::acos((r - g) / std::sqrt(r * r - 2 * g * r + 1)) * 180 / std::numbers::pi;
    ASSERT_NEAR(hue_shift_oracle(r, g), direct, 1e-9);
  }
}

TEST(HueShiftOracle, MatchesAdaptationHueChange) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> rho(0.05, 5), gamma(-1, 1), rot(0, 2 * std::numbers::pi),
      cast_c(1, 40);
  for (int i = 0; i < 2000; ++i) {
    const double r = rho(rng), g = gamma(rng), phi = rot(rng), cc = cast_c(rng);
    const double s = std::sqrt(1 - g * g);
    const double ac = cc * std::cos(phi), bc = cc * std::sin(phi);
    const double a0 = r * cc * (g * std::cos(phi) - s * std::sin(phi));
    const double b0 = r * cc * (g * std::sin(phi) + s * std::cos(phi));
    const double a1 = (a0 - ac) / 2, b1 = (b0 - bc) / 2;
    const double measured = std::atan2(std::abs(a0 * b1 - b0 * a1), a0 * a1 + b0 * b1) * 180 / std::numbers::pi;
    ASSERT_NEAR(hue_shift_oracle(r, g), measured, 1e-6) << r << ' ' << g;
  }
}

}  // namespace
}  // namespace uwcc
