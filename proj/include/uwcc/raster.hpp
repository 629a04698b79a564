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

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace uwcc {

/// Single-channel image plane; rows are image rows (height), columns are x.
template <typename Scalar>
using Plane = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// A CIELAB triple (L*, a*, b*).
template <typename Scalar>
using LabColor = Eigen::Matrix<Scalar, 3, 1>;

/// 8-bit sRGB image, row-major interleaved R,G,B.
class RasterRGB {
 public:
  RasterRGB() = default;

  RasterRGB(int width, int height)
      : width_(width), height_(height) {
    check_dims(width, height);
    data_.assign(static_cast<std::size_t>(width) * height * 3, 0);
  }

  RasterRGB(int width, int height, std::vector<std::uint8_t> data)
      : width_(width), height_(height), data_(std::move(data)) {
    check_dims(width, height);
    if (data_.size() != static_cast<std::size_t>(width) * height * 3) {
      throw std::invalid_argument("RasterRGB: data length does not match width*height*3");
    }
  }

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t pixel_count() const { return static_cast<std::size_t>(width_) * height_; }
  bool empty() const { return data_.empty(); }

  const std::vector<std::uint8_t>& data() const { return data_; }
  std::vector<std::uint8_t>& data() { return data_; }

  std::uint8_t* pixel(int x, int y) {
    return data_.data() + (static_cast<std::size_t>(y) * width_ + x) * 3;
  }
  const std::uint8_t* pixel(int x, int y) const {
    return data_.data() + (static_cast<std::size_t>(y) * width_ + x) * 3;
  }

  friend bool operator==(const RasterRGB&, const RasterRGB&) = default;

 private:
  static void check_dims(int width, int height) {
    if (width < 1 || height < 1) {
      throw std::invalid_argument("RasterRGB: width and height must be >= 1");
    }
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> data_;
};

/// Planar CIELAB image.
template <typename Scalar>
struct RasterLab {
  Plane<Scalar> L;
  Plane<Scalar> a;
  Plane<Scalar> b;

  RasterLab() = default;
  RasterLab(int width, int height)
      : L(height, width), a(height, width), b(height, width) {
    if (width < 1 || height < 1) {
      throw std::invalid_argument("RasterLab: width and height must be >= 1");
    }
  }

  int width() const { return static_cast<int>(L.cols()); }
  int height() const { return static_cast<int>(L.rows()); }

  LabColor<Scalar> at(Eigen::Index x, Eigen::Index y) const {
    return {L(y, x), a(y, x), b(y, x)};
  }
  void set(Eigen::Index x, Eigen::Index y, const LabColor<Scalar>& c) {
    L(y, x) = c[0];
    a(y, x) = c[1];
    b(y, x) = c[2];
  }

  bool same_size(const RasterLab& other) const {
    return width() == other.width() && height() == other.height();
  }

  bool all_finite() const {
    return L.allFinite() && a.allFinite() && b.allFinite();
  }
};

}  // namespace uwcc
