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
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "uwcc/raster.hpp"

namespace uwcc {

/// Per-channel blur widths for the cast estimate. The chromatic planes share
/// one width and lightness uses a multiple of it.
struct SigmaTriplet {
  double sigma_L;
  double sigma_a;
  double sigma_b;

  static SigmaTriplet from_base(double sigma0, double n) {
    if (!(sigma0 > 0.0)) throw std::invalid_argument("SigmaTriplet: sigma0 must be > 0");
    if (!(n > 1.0)) throw std::invalid_argument("SigmaTriplet: n must be > 1");
    return {n * sigma0, sigma0, sigma0};
  }
};

/// Kernel radius for a given sigma: max(1, ceil(3 sigma)).
inline int gaussian_radius(double sigma) {
  return std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
}

/// Normalized 1-D Gaussian taps for offsets -r..r.
inline std::vector<double> gaussian_kernel(double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("gaussian_kernel: sigma must be > 0");
  const int r = gaussian_radius(sigma);
  std::vector<double> w(2 * r + 1);
  double sum = 0.0;
  for (int k = -r; k <= r; ++k) {
    w[k + r] = std::exp(-(static_cast<double>(k) * k) / (2.0 * sigma * sigma));
    sum += w[k + r];
  }
  for (double& v : w) v /= sum;
  return w;
}

/// Symmetric extension including the edge sample (... 1 0 | 0 1 2 ... n-1 | n-1 n-2 ...),
/// periodic with period 2n so that radii larger than the signal are handled.
inline Eigen::Index mirror_index(Eigen::Index i, Eigen::Index n) {
  const Eigen::Index period = 2 * n;
  Eigen::Index m = i % period;
  if (m < 0) m += period;
  return m < n ? m : period - 1 - m;
}

namespace detail {

// Row-stochastic n x n operator applying the mirrored 1-D convolution.
// Taps that reflect onto the same source sample are folded together.
template <typename Scalar>
Eigen::SparseMatrix<Scalar, Eigen::RowMajor> blur_operator(Eigen::Index n, double sigma) {
  const std::vector<double> w = gaussian_kernel(sigma);
  const int r = static_cast<int>(w.size() / 2);
  std::vector<Eigen::Triplet<Scalar>> taps;
  taps.reserve(static_cast<std::size_t>(n) * std::min<Eigen::Index>(w.size(), n));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (int k = -r; k <= r; ++k) {
      taps.emplace_back(i, mirror_index(i + k, n), static_cast<Scalar>(w[k + r]));
    }
  }
  Eigen::SparseMatrix<Scalar, Eigen::RowMajor> op(n, n);
  op.setFromTriplets(taps.begin(), taps.end());
  return op;
}

}  // namespace detail

/// Separable Gaussian blur with mirror boundaries. Applied as
/// K_rows * P * K_cols^T; dense products are used once the folded operator
/// fills a sizeable fraction of its matrix.
template <typename Scalar>
Plane<Scalar> gaussian_blur_plane(const Plane<Scalar>& p, double sigma) {
  if (p.size() == 0) throw std::invalid_argument("gaussian_blur_plane: empty plane");
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const auto rows = detail::blur_operator<Scalar>(p.rows(), sigma);
  const auto cols = detail::blur_operator<Scalar>(p.cols(), sigma);

  const auto dense_enough = [](const auto& op) {
    return op.nonZeros() * 4 > op.rows() * op.cols();
  };

  Mat tmp;
  if (dense_enough(rows)) {
    tmp.noalias() = Mat(rows) * p.matrix();
  } else {
    tmp.noalias() = rows * p.matrix();
  }
  Plane<Scalar> out(p.rows(), p.cols());
  if (dense_enough(cols)) {
    out.matrix().noalias() = tmp * Mat(cols).transpose();
  } else {
    out.matrix() = (cols * tmp.transpose()).transpose();
  }
  return out;
}

/// Base blur width 0.25 * (max(W,H)/2 - 1), so the kernel spans about half
/// the longer image side.
inline double default_sigma(int width, int height) {
  if (width < 3 || height < 3) {
    throw std::invalid_argument("default_sigma: image must be at least 3x3");
  }
  return 0.25 * (std::max(width, height) / 2.0 - 1.0);
}

/// Channel-wise blur of a Lab image: the smooth color-cast field.
template <typename Scalar>
RasterLab<Scalar> estimate_cast(const RasterLab<Scalar>& img, const SigmaTriplet& s) {
  RasterLab<Scalar> out;
  out.L = gaussian_blur_plane(img.L, s.sigma_L);
  out.a = gaussian_blur_plane(img.a, s.sigma_a);
  out.b = gaussian_blur_plane(img.b, s.sigma_b);
  return out;
}

}  // namespace uwcc
