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

#include "uwcc/gamut.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>
#include <system_error>

namespace uwcc {

namespace {

constexpr char kMagic[8] = {'U', 'W', 'C', 'C', 'G', 'M', 'T', '\0'};
constexpr std::uint32_t kCacheVersion = 1;

double cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

double polar_deg(const Point2& p) {
  double t = std::atan2(p.y(), p.x()) * 180.0 / std::numbers::pi;
  if (t < 0.0) t += 360.0;
  if (t >= 360.0) t -= 360.0;
  return t;
}

// Uniform double in [0,1) from the top 53 bits; independent of the
// standard library's distribution implementation.
double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <typename T>
void write_pod(std::ostream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
bool read_pod(std::istream& is, T& v) {
  return static_cast<bool>(is.read(reinterpret_cast<char*>(&v), sizeof(T)));
}

}  // namespace

std::vector<Point2> convex_hull(std::vector<Point2> points) {
  // Andrew's monotone chain.
  std::sort(points.begin(), points.end(), [](const Point2& p, const Point2& q) {
    return p.x() < q.x() || (p.x() == q.x() && p.y() < q.y());
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;

  std::vector<Point2> hull(2 * points.size());
  std::size_t k = 0;
  for (const Point2& p : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    const Point2& p = points[i];
    while (k >= lower && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

GamutSlice GamutSlice::from_hull(const std::vector<Point2>& hull_ccw) {
  GamutSlice s;
  s.hull = hull_ccw;
  const std::size_t n = hull_ccw.size();
  if (n < 3) return s;
  for (std::size_t i = 0; i < n; ++i) {
    if (cross(hull_ccw[i], hull_ccw[(i + 1) % n], Point2::Zero()) <= 0.0) return s;
  }

  // Rotate so the vertex with the smallest polar angle comes first; CCW order
  // then makes the angles ascend.
  std::vector<double> angles(n);
  std::transform(hull_ccw.begin(), hull_ccw.end(), angles.begin(), polar_deg);
  const auto first = std::min_element(angles.begin(), angles.end()) - angles.begin();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t src = (first + i) % n;
    s.vertices.push_back(hull_ccw[src]);
    s.theta_deg.push_back(angles[src]);
    s.radius.push_back(hull_ccw[src].norm());
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Point2& v = s.vertices[j];
    const Point2& next = s.vertices[(j + 1) % n];
    const Point2 to_origin = -v;
    const Point2 along = next - v;
    const double c = to_origin.dot(along) / (to_origin.norm() * along.norm());
    s.corner.push_back(std::acos(std::clamp(c, -1.0, 1.0)));
  }
  return s;
}

double GamutSlice::max_chroma(double hue_deg) const {
  if (degenerate()) return 0.0;
  const std::size_t n = vertices.size();
  // Sector j satisfies theta_j <= h < theta_{j+1}; hues below theta_1 fall in
  // the wrap-around sector of the last vertex.
  auto it = std::upper_bound(theta_deg.begin(), theta_deg.end(), hue_deg);
  const std::size_t j = it == theta_deg.begin() ? n - 1 : static_cast<std::size_t>(it - theta_deg.begin()) - 1;
  double offset = hue_deg - theta_deg[j];
  if (offset < 0.0) offset += 360.0;
  if (offset == 0.0) return radius[j];
  // Law of sines in the triangle (origin, V_j, boundary point).
  const double phi = offset * std::numbers::pi / 180.0;
  return radius[j] * std::sin(corner[j]) / std::sin(std::numbers::pi - corner[j] - phi);
}

SliceClouds sample_gamut_slices(std::size_t sample_count, std::uint64_t seed) {
  if (sample_count < 10000) throw std::invalid_argument("gamut: sample_count must be >= 10000");
  // The slice hulls only depend on the boundary of the solid, which is the
  // image of the cube's surface, so samples are drawn uniformly on the six
  // faces. Interior samples can never become hull vertices.
  std::mt19937_64 rng(seed);
  SliceClouds clouds;
  for (std::size_t i = 0; i < sample_count; ++i) {
    const auto face = static_cast<int>(rng() % 6);
    const double u = unit_double(rng);
    const double v = unit_double(rng);
    std::array<double, 3> rgb{};
    const int fixed = face / 2;
    rgb[fixed] = face % 2 ? 1.0 : 0.0;
    rgb[(fixed + 1) % 3] = u;
    rgb[(fixed + 2) % 3] = v;
    const LabColor<double> lab = linear_rgb_to_lab(
        Eigen::Vector3d(srgb_decode(rgb[0]), srgb_decode(rgb[1]), srgb_decode(rgb[2])));
    clouds[lightness_slice(lab[0])].emplace_back(lab[1], lab[2]);
  }
  return clouds;
}

GamutTable GamutTable::build(std::size_t sample_count, std::uint64_t seed) {
  const SliceClouds clouds = sample_gamut_slices(sample_count, seed);
  std::array<std::vector<Point2>, kGamutSlices> hulls;
  for (int i = 0; i < kGamutSlices; ++i) hulls[i] = convex_hull(clouds[i]);
  return from_hulls(hulls, sample_count, seed);
}

GamutTable GamutTable::from_hulls(const std::array<std::vector<Point2>, kGamutSlices>& hulls,
                                  std::size_t sample_count, std::uint64_t seed) {
  GamutTable t;
  t.sample_count_ = sample_count;
  t.seed_ = seed;
  for (int i = 0; i < kGamutSlices; ++i) t.slices_[i] = GamutSlice::from_hull(hulls[i]);
  return t;
}

bool GamutTable::operator==(const GamutTable& other) const {
  if (sample_count_ != other.sample_count_ || seed_ != other.seed_) return false;
  for (int i = 0; i < kGamutSlices; ++i) {
    if (slices_[i].hull != other.slices_[i].hull) return false;
  }
  return true;
}

// Layout (host byte order): magic[8], u32 version, u64 sample_count, u64 seed,
// then for each of the 101 slices: u32 vertex count, count x (f64 a, f64 b).
void GamutTable::save(const std::filesystem::path& path) const {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("gamut cache: cannot write " + tmp.string());
    os.write(kMagic, sizeof(kMagic));
    write_pod(os, kCacheVersion);
    write_pod(os, static_cast<std::uint64_t>(sample_count_));
    write_pod(os, seed_);
    for (const GamutSlice& s : slices_) {
      write_pod(os, static_cast<std::uint32_t>(s.hull.size()));
      for (const Point2& p : s.hull) {
        write_pod(os, p.x());
        write_pod(os, p.y());
      }
    }
    if (!os) throw std::runtime_error("gamut cache: write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::optional<GamutTable> GamutTable::load(const std::filesystem::path& path,
                                           std::size_t sample_count, std::uint64_t seed) {
  std::ifstream is(path, std::ios::binary);
  if (!is) return std::nullopt;
  char magic[sizeof(kMagic)];
  if (!is.read(magic, sizeof(magic)) || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    return std::nullopt;
  }
  std::uint32_t version = 0;
  std::uint64_t stored_samples = 0, stored_seed = 0;
  if (!read_pod(is, version) || version != kCacheVersion) return std::nullopt;
  if (!read_pod(is, stored_samples) || !read_pod(is, stored_seed)) return std::nullopt;
  if (stored_samples != sample_count || stored_seed != seed) return std::nullopt;

  std::array<std::vector<Point2>, kGamutSlices> hulls;
  for (auto& hull : hulls) {
    std::uint32_t count = 0;
    if (!read_pod(is, count) || count > 1'000'000) return std::nullopt;
    hull.resize(count);
    for (Point2& p : hull) {
      double a = 0, b = 0;
      if (!read_pod(is, a) || !read_pod(is, b)) return std::nullopt;
      p = {a, b};
    }
  }
  if (is.peek() != std::char_traits<char>::eof()) return std::nullopt;
  return from_hulls(hulls, sample_count, seed);
}

GamutTable GamutTable::load_or_build(const std::filesystem::path& path, std::size_t sample_count,
                                     std::uint64_t seed) {
  if (auto cached = load(path, sample_count, seed)) return std::move(*cached);
  GamutTable t = build(sample_count, seed);
  try {
    t.save(path);
  } catch (const std::exception&) {
    // An unwritable cache directory only costs a rebuild next time.
  }
  return t;
}

std::filesystem::path default_gamut_cache_path(std::size_t sample_count, std::uint64_t seed) {
  std::filesystem::path dir;
  if (const char* d = std::getenv("UWCC_CACHE_DIR"); d && *d) {
    dir = d;
  } else if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) {
    dir = std::filesystem::path(x) / "uwcc";
  } else if (const char* h = std::getenv("HOME"); h && *h) {
    dir = std::filesystem::path(h) / ".cache" / "uwcc";
  } else {
    dir = std::filesystem::temp_directory_path() / "uwcc";
  }
  return dir / ("gamut-v" + std::to_string(kCacheVersion) + "-" + std::to_string(sample_count) +
                "-" + std::to_string(seed) + ".bin");
}

}  // namespace uwcc
