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
#include <utility>
#include <vector>

#include "uwcc/colorspace.hpp"
#include "uwcc/gamut.hpp"
#include "uwcc/raster.hpp"

namespace uwcc {

struct EnhanceParams {
  double eta = 10.0;   // chroma gamma; 1 is the identity
  double beta = 0.25;  // robust factor exponent
  double stretch_lo = 1.0;
  double stretch_hi = 99.0;
  double stretch_target_lo = 5.0;
  double stretch_target_hi = 95.0;

  void validate() const {
    if (!(eta >= 1.0)) throw std::invalid_argument("EnhanceParams: eta must be >= 1");
    if (!(beta > 0.0 && beta <= 1.0)) throw std::invalid_argument("EnhanceParams: beta must be in (0,1]");
    if (!(stretch_lo >= 0.0 && stretch_lo < stretch_hi && stretch_hi <= 100.0)) {
      throw std::invalid_argument("EnhanceParams: need 0 <= stretch_lo < stretch_hi <= 100");
    }
  }
};

/// Percentile of a sample with linear interpolation between order statistics.
template <typename Scalar>
double percentile(std::vector<Scalar> values, double pct) {
  if (values.empty()) throw std::invalid_argument("percentile: empty sample");
  const double pos = std::clamp(pct, 0.0, 100.0) / 100.0 * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const double frac = pos - static_cast<double>(lo);
  std::nth_element(values.begin(), values.begin() + lo, values.end());
  const double v_lo = static_cast<double>(values[lo]);
  if (frac == 0.0 || lo + 1 >= values.size()) return v_lo;
  const double v_hi = static_cast<double>(*std::min_element(values.begin() + lo + 1, values.end()));
  return v_lo + frac * (v_hi - v_lo);
}

/// Affine lightness stretch taking the stretch_lo/stretch_hi percentiles to
/// the target levels, clamped to [0,100]. A flat plane is returned as is.
template <typename Scalar>
Plane<Scalar> stretch_lightness(const Plane<Scalar>& L, const EnhanceParams& p) {
  p.validate();
  std::vector<Scalar> values(L.data(), L.data() + L.size());
  const double lo = percentile(values, p.stretch_lo);
  const double hi = percentile(std::move(values), p.stretch_hi);
  if (hi - lo < 1e-6) return L;
  const double gain = (p.stretch_target_hi - p.stretch_target_lo) / (hi - lo);
  Plane<Scalar> out(L.rows(), L.cols());
  for (Eigen::Index i = 0; i < L.size(); ++i) {
    const double v = p.stretch_target_lo + (static_cast<double>(L(i)) - lo) * gain;
    out(i) = static_cast<Scalar>(std::clamp(v, 0.0, 100.0));
  }
  return out;
}

/// Moves chroma from the L_adapt slice to the L_hat slice keeping its
/// fraction of the maximal chroma. The fraction is capped at 1.
inline double rescale_chroma(double C_adapt, double L_adapt, double L_hat, double hue_deg,
                             const GamutTable& table) {
  if (C_adapt < kAchromaticChroma) return 0.0;
  const double limit = table.max_chroma(L_adapt, hue_deg);
  if (limit <= 0.0) return 0.0;
  const double ratio = std::clamp(C_adapt / limit, 0.0, 1.0);
  return ratio * table.max_chroma(L_hat, hue_deg);
}

/// Gamma curve on the fraction of maximal chroma: (C1/Cmax)^(1/eta) * Cmax.
inline double gamma_enhance_chroma(double C1, double L_hat, double hue_deg, double eta,
                                   const GamutTable& table) {
  const double limit = table.max_chroma(L_hat, hue_deg);
  if (limit <= 0.0) return 0.0;
  const double ratio = std::clamp(C1 / limit, 0.0, 1.0);
  return std::pow(ratio, 1.0 / eta) * limit;
}

/// Unsigned angle in degrees between the image chromaticity and the cast
/// chromaticity. A cast without direction yields 180 (nothing to suppress);
/// an achromatic pixel against a chromatic cast yields 0.
inline double hue_difference(double a0, double b0, double ac, double bc) {
  if (chroma(ac, bc) < kAchromaticChroma) return 180.0;
  if (chroma(a0, b0) < kAchromaticChroma) return 0.0;
  const double dot = a0 * ac + b0 * bc;
  const double cr = a0 * bc - b0 * ac;
  return std::atan2(std::abs(cr), dot) * 180.0 / std::numbers::pi;
}

/// (theta / 180)^beta.
inline double robust_factor(double theta_deg, double beta) {
  return std::pow(std::clamp(theta_deg, 0.0, 180.0) / 180.0, beta);
}

inline std::pair<double, double> apply_robust(double a2, double b2, double F) {
  return {F * a2, F * b2};
}

/// Predicted hue change of the lambda = 1 adaptation for a pixel whose
/// chroma is rho times the cast chroma and whose direction cosine with the
/// cast is gamma. Equal to
///   (180/pi) acos((rho - gamma) / sqrt(rho^2 - 2 gamma rho + 1)),
/// evaluated as an atan2 to stay accurate near 0 and 180 degrees.
inline double hue_shift_oracle(double rho, double gamma) {
  if (!(rho > 0.0)) throw std::invalid_argument("hue_shift_oracle: rho must be > 0");
  if (!(gamma >= -1.0 && gamma <= 1.0)) {
    throw std::invalid_argument("hue_shift_oracle: gamma must be in [-1,1]");
  }
  if (rho == 1.0 && gamma == 1.0) throw std::domain_error("hue_shift_oracle: singular at rho = gamma = 1");
  const double sine = std::sqrt((1.0 - gamma) * (1.0 + gamma));
  return std::atan2(sine, rho - gamma) * 180.0 / std::numbers::pi;
}

}  // namespace uwcc
