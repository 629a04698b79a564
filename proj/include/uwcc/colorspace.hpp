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
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>

#include <Eigen/Dense>

#include "uwcc/raster.hpp"

namespace uwcc {

/// Chroma below this is treated as achromatic (hue undefined).
inline constexpr double kAchromaticChroma = 1e-4;

namespace detail {

// Normalized primary matrix for sRGB primaries under D65, built from the
// chromaticity coordinates so that RGB(1,1,1) maps onto the white point.
inline const Eigen::Matrix3d& srgb_to_xyz_matrix() {
  static const Eigen::Matrix3d m = [] {
    const double xy[4][2] = {{0.64, 0.33}, {0.30, 0.60}, {0.15, 0.06}, {0.3127, 0.3290}};
    Eigen::Matrix3d primaries;
    for (int i = 0; i < 3; ++i) {
      const double x = xy[i][0], y = xy[i][1];
      primaries.col(i) << x / y, 1.0, (1.0 - x - y) / y;
    }
    const Eigen::Vector3d white(xy[3][0] / xy[3][1], 1.0, (1.0 - xy[3][0] - xy[3][1]) / xy[3][1]);
    const Eigen::Vector3d s = primaries.partialPivLu().solve(white);
    return Eigen::Matrix3d(primaries * s.asDiagonal());
  }();
  return m;
}

inline const Eigen::Matrix3d& xyz_to_srgb_matrix() {
  static const Eigen::Matrix3d m = srgb_to_xyz_matrix().inverse();
  return m;
}

inline const Eigen::Vector3d& d65_white() {
  static const Eigen::Vector3d w = srgb_to_xyz_matrix().rowwise().sum();
  return w;
}

inline constexpr double kDelta = 6.0 / 29.0;

inline double lab_f(double t) {
  constexpr double d3 = kDelta * kDelta * kDelta;
  return t > d3 ? std::cbrt(t) : t / (3.0 * kDelta * kDelta) + 4.0 / 29.0;
}

inline double lab_f_inv(double u) {
  return u > kDelta ? u * u * u : 3.0 * kDelta * kDelta * (u - 4.0 / 29.0);
}

}  // namespace detail

/// sRGB electro-optical transfer: encoded value in [0,1] to linear light.
inline double srgb_decode(double v) {
  return v <= 0.04045 ? v / 12.92 : std::pow((v + 0.055) / 1.055, 2.4);
}

namespace detail {

inline const std::array<double, 256>& srgb_decode_table() {
  static const std::array<double, 256> table = [] {
    std::array<double, 256> t{};
    for (int i = 0; i < 256; ++i) t[i] = srgb_decode(i / 255.0);
    return t;
  }();
  return table;
}

}  // namespace detail

/// Inverse of srgb_decode.
inline double srgb_encode(double v) {
  return v <= 0.0031308 ? 12.92 * v : 1.055 * std::pow(v, 1.0 / 2.4) - 0.055;
}

/// Linear sRGB (not clamped) to CIELAB under D65.
template <typename Scalar = double>
LabColor<Scalar> linear_rgb_to_lab(const Eigen::Vector3d& rgb) {
  const Eigen::Vector3d xyz = detail::srgb_to_xyz_matrix() * rgb;
  const Eigen::Vector3d& w = detail::d65_white();
  const double fx = detail::lab_f(xyz[0] / w[0]);
  const double fy = detail::lab_f(xyz[1] / w[1]);
  const double fz = detail::lab_f(xyz[2] / w[2]);
  const double L = std::clamp(116.0 * fy - 16.0, 0.0, 100.0);
  return LabColor<Scalar>(static_cast<Scalar>(L), static_cast<Scalar>(500.0 * (fx - fy)),
                          static_cast<Scalar>(200.0 * (fy - fz)));
}

/// CIELAB to linear sRGB; the result may fall outside [0,1].
template <typename Scalar>
Eigen::Vector3d lab_to_linear_rgb(const LabColor<Scalar>& lab) {
  const double fy = (static_cast<double>(lab[0]) + 16.0) / 116.0;
  const double fx = fy + static_cast<double>(lab[1]) / 500.0;
  const double fz = fy - static_cast<double>(lab[2]) / 200.0;
  const Eigen::Vector3d& w = detail::d65_white();
  const Eigen::Vector3d xyz(w[0] * detail::lab_f_inv(fx), w[1] * detail::lab_f_inv(fy),
                            w[2] * detail::lab_f_inv(fz));
  return detail::xyz_to_srgb_matrix() * xyz;
}

template <typename Scalar = double>
LabColor<Scalar> srgb8_to_lab(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  const auto& lut = detail::srgb_decode_table();
  return linear_rgb_to_lab<Scalar>(Eigen::Vector3d(lut[r], lut[g], lut[b]));
}

template <typename Scalar>
std::array<std::uint8_t, 3> lab_to_srgb8(const LabColor<Scalar>& lab) {
  const Eigen::Vector3d lin = lab_to_linear_rgb(lab).cwiseMax(0.0).cwiseMin(1.0);
  std::array<std::uint8_t, 3> out{};
  for (int i = 0; i < 3; ++i) {
    out[i] = static_cast<std::uint8_t>(std::lround(srgb_encode(lin[i]) * 255.0));
  }
  return out;
}

template <typename Scalar = double>
RasterLab<Scalar> srgb_to_lab(const RasterRGB& img) {
  RasterLab<Scalar> out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const std::uint8_t* p = img.pixel(x, y);
      out.set(x, y, srgb8_to_lab<Scalar>(p[0], p[1], p[2]));
    }
  }
  return out;
}

template <typename Scalar>
RasterRGB lab_to_srgb(const RasterLab<Scalar>& img) {
  RasterRGB out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const auto rgb = lab_to_srgb8(img.at(x, y));
      std::copy(rgb.begin(), rgb.end(), out.pixel(x, y));
    }
  }
  return out;
}

template <typename Scalar>
Scalar chroma(Scalar a, Scalar b) {
  return std::hypot(a, b);
}

/// Hue angle in degrees, [0,360). Empty when the color is achromatic.
template <typename Scalar>
std::optional<Scalar> hue_angle(Scalar a, Scalar b) {
  if (chroma(a, b) < static_cast<Scalar>(kAchromaticChroma)) return std::nullopt;
  Scalar h = std::atan2(b, a) * static_cast<Scalar>(180.0 / std::numbers::pi);
  if (h < 0) h += 360;
  // atan2 of a tiny negative b can round up to exactly 360.
  if (h >= 360) h -= 360;
  return h;
}

template <typename Scalar>
Scalar delta_e(const LabColor<Scalar>& c1, const LabColor<Scalar>& c2) {
  return (c1 - c2).norm();
}

template <typename Scalar>
LabColor<Scalar> complement(const LabColor<Scalar>& c) {
  return {Scalar(100) - c[0], -c[1], -c[2]};
}

/// (a*, b*) from chroma and hue angle in degrees.
template <typename Scalar>
Eigen::Matrix<Scalar, 2, 1> chromaticity(Scalar chroma_value, Scalar hue_deg) {
  const Scalar rad = hue_deg * static_cast<Scalar>(std::numbers::pi / 180.0);
  return {chroma_value * std::cos(rad), chroma_value * std::sin(rad)};
}

}  // namespace uwcc
