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

#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "uwcc/colorspace.hpp"

namespace uwcc {

inline constexpr int kGamutSlices = 101;
inline constexpr std::size_t kDefaultGamutSamples = 500000;
inline constexpr std::uint64_t kDefaultGamutSeed = 42;

using Point2 = Eigen::Vector2d;
using SliceClouds = std::array<std::vector<Point2>, kGamutSlices>;

/// Slice index for a lightness value: ceil(L) clamped to [0,100].
inline int lightness_slice(double L) {
  const double c = std::ceil(L);
  if (!(c > 0.0)) return 0;
  if (c >= 100.0) return 100;
  return static_cast<int>(c);
}

/// Convex hull in counter-clockwise order, collinear points dropped.
std::vector<Point2> convex_hull(std::vector<Point2> points);

/// One lightness slice: hull vertices sorted by polar angle about the origin.
struct GamutSlice {
  std::vector<Point2> vertices;
  std::vector<double> theta_deg;  // polar angle of each vertex, ascending in [0,360)
  std::vector<double> radius;     // distance of each vertex from the origin
  std::vector<double> corner;     // angle at vertex j between V_j->O and V_j->V_{j+1}, radians

  /// Fewer than three vertices, or the origin is not strictly inside.
  bool degenerate() const { return vertices.empty(); }

  /// Builds the polar description of a hull; leaves the slice degenerate if
  /// the hull does not enclose the origin.
  static GamutSlice from_hull(const std::vector<Point2>& hull);

  /// Distance from the origin to the boundary in direction hue_deg.
  double max_chroma(double hue_deg) const;

  /// Raw hull as given to from_hull (kept even when degenerate).
  std::vector<Point2> hull;
};

/// Per-lightness convex approximation of the sRGB gamut in CIELAB.
/// Immutable once built; safe to share across threads.
class GamutTable {
 public:
  static GamutTable build(std::size_t sample_count = kDefaultGamutSamples,
                          std::uint64_t seed = kDefaultGamutSeed);
  static GamutTable from_hulls(const std::array<std::vector<Point2>, kGamutSlices>& hulls,
                               std::size_t sample_count, std::uint64_t seed);

  double max_chroma(double L, double hue_deg) const {
    return slices_[lightness_slice(L)].max_chroma(hue_deg);
  }

  const GamutSlice& slice(int index) const { return slices_.at(index); }
  std::size_t sample_count() const { return sample_count_; }
  std::uint64_t seed() const { return seed_; }

  void save(const std::filesystem::path& path) const;
  /// Empty if the file is missing, malformed, or built with other parameters.
  static std::optional<GamutTable> load(const std::filesystem::path& path,
                                        std::size_t sample_count, std::uint64_t seed);
  /// Loads the cache if it matches, otherwise builds and rewrites it.
  static GamutTable load_or_build(const std::filesystem::path& path, std::size_t sample_count,
                                  std::uint64_t seed);

  bool operator==(const GamutTable& other) const;

 private:
  std::array<GamutSlice, kGamutSlices> slices_;
  std::size_t sample_count_ = 0;
  std::uint64_t seed_ = 0;
};

/// Uniform samples on the surface of the sRGB cube, converted to Lab and
/// binned by slice. Returns the (a*, b*) clouds the table is built from.
SliceClouds sample_gamut_slices(std::size_t sample_count, std::uint64_t seed);

/// Default on-disk location of the table cache.
std::filesystem::path default_gamut_cache_path(std::size_t sample_count, std::uint64_t seed);

/// Shrinks chroma to the slice boundary, keeping lightness and hue.
template <typename Scalar>
LabColor<Scalar> clip_to_gamut(const GamutTable& table, const LabColor<Scalar>& c) {
  const auto h = hue_angle(c[1], c[2]);
  if (!h) return c;
  const double limit = table.max_chroma(static_cast<double>(c[0]), static_cast<double>(*h));
  const double cur = static_cast<double>(chroma(c[1], c[2]));
  if (cur <= limit) return c;
  Scalar s = static_cast<Scalar>(limit / cur);
  LabColor<Scalar> out(c[0], c[1] * s, c[2] * s);
  // Rounding in the scale or in the recomputed hue can leave the result a few
  // ulps outside; shrink until the boundary test passes on the output itself.
  for (int i = 0; i < 64; ++i) {
    const auto h_out = hue_angle(out[1], out[2]);
    if (!h_out || static_cast<double>(chroma(out[1], out[2])) <=
                      table.max_chroma(static_cast<double>(out[0]), static_cast<double>(*h_out))) {
      break;
    }
    s *= Scalar(1) - Scalar(4) * std::numeric_limits<Scalar>::epsilon();
    out = {c[0], c[1] * s, c[2] * s};
  }
  return out;
}

}  // namespace uwcc
