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

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "uwcc/colorspace.hpp"
#include "uwcc/raster.hpp"

namespace uwcc {

struct UniformityParams {
  double mu_deg = 45.0;  // largest hue rotation applied in the blue region
  double m = 7.0;        // steepness of the chroma ramp

  void validate() const {
    if (!(mu_deg >= 0.0)) throw std::invalid_argument("UniformityParams: mu_deg must be >= 0");
    if (!(m >= 1.0)) throw std::invalid_argument("UniformityParams: m must be >= 1");
  }
};

/// Hue after the blue-region linearization:
///   h - mu * sqrt(C^m / (C^m + 10^m)) * exp(-((h - 275) / 25)^2)
inline double adjusted_blue_hue(double chroma_value, double hue_deg, const UniformityParams& p) {
  // sqrt(C^m / (C^m + 10^m)) == 1 / sqrt(1 + (10/C)^m), which stays finite.
  const double ramp = chroma_value > 0.0 ? 1.0 / std::sqrt(1.0 + std::pow(10.0 / chroma_value, p.m))
                                         : 0.0;
  const double z = (hue_deg - 275.0) / 25.0;
  return hue_deg - p.mu_deg * ramp * std::exp(-z * z);
}

template <typename Scalar>
RasterLab<Scalar> adjust_blue_hue(const RasterLab<Scalar>& img, const UniformityParams& p) {
  p.validate();
  RasterLab<Scalar> out = img;
  for (Eigen::Index i = 0; i < img.L.size(); ++i) {
    const Scalar a = img.a(i), b = img.b(i);
    const auto h = hue_angle(a, b);
    if (!h) continue;
    const double c = static_cast<double>(chroma(a, b));
    const double h_adj = adjusted_blue_hue(c, static_cast<double>(*h), p);
    if (h_adj == static_cast<double>(*h)) continue;
    const double rad = h_adj * std::numbers::pi / 180.0;
    out.a(i) = static_cast<Scalar>(c * std::cos(rad));
    out.b(i) = static_cast<Scalar>(c * std::sin(rad));
  }
  return out;
}

/// Hue weighting of the Helmholtz-Kohlrausch term; the half angle is in degrees.
inline double hk_g(double hue_deg) {
  const double half = (hue_deg - 90.0) / 2.0 * std::numbers::pi / 180.0;
  return 0.116 * std::abs(std::sin(half)) + 0.085;
}

/// Lightness as perceived once chroma brightens the color.
inline double hk_perceived_lightness(double L, double C, double hue_deg) {
  return L + (2.5 - 0.025 * L) * hk_g(hue_deg) * C;
}

inline constexpr double kHkMinDenominator = 0.05;

struct HkInverse {
  double value;      // clamped to [0,100]
  double unclamped;  // exact algebraic inverse (with the denominator guard applied)
  bool guarded;      // the denominator was raised to kHkMinDenominator
};

/// Lightness whose perceived lightness at (C, h) equals L_hat.
inline HkInverse hk_inverse(double L_hat, double C, double hue_deg) {
  const double g = hk_g(hue_deg);
  double denom = 1.0 - 0.025 * g * C;
  const bool guarded = denom < kHkMinDenominator;
  if (guarded) denom = kHkMinDenominator;
  const double raw = (L_hat - 2.5 * g * C) / denom;
  return {std::clamp(raw, 0.0, 100.0), raw, guarded};
}

inline double hk_inverse_adjust(double L_hat, double C, double hue_deg) {
  return hk_inverse(L_hat, C, hue_deg).value;
}

}  // namespace uwcc
