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
#include <stdexcept>

#include "uwcc/colorspace.hpp"
#include "uwcc/filtering.hpp"
#include "uwcc/raster.hpp"

namespace uwcc {

// Complementary adaptation.
//
// Each pixel c0 is pulled towards the complement of the local color cast g:
//
//   c_adapt = argmin_c  |c - c0|^2 + lambda * |c - complement(g)|^2
//           = (c0 + lambda * complement(g)) / (1 + lambda)
//
// With lambda = 1 this is the midpoint of c0 and complement(g); lightness is
// drawn towards 100 - g_L and chromaticity towards -g_ab, which neutralizes
// whatever the blurred field says is dominant.

struct AdaptationParams {
  double lambda = 1.0;
  double sigma0 = 1.0;
  double n = 3.0;

  void validate() const {
    if (!(lambda > 0.0)) throw std::invalid_argument("AdaptationParams: lambda must be > 0");
    if (!(n > 1.0)) throw std::invalid_argument("AdaptationParams: n must be > 1");
    if (!(sigma0 > 0.0)) throw std::invalid_argument("AdaptationParams: sigma0 must be > 0");
  }

  SigmaTriplet sigmas() const { return SigmaTriplet::from_base(sigma0, n); }
};

/// Closed-form minimizer for one pixel.
template <typename Scalar>
LabColor<Scalar> adapt_pixel(const LabColor<Scalar>& c0, const LabColor<Scalar>& cast,
                             Scalar lambda) {
  const LabColor<Scalar> target = complement(cast);
  const Scalar denom = Scalar(1) + lambda;
  // Written per component so that lambda == 1 reduces to (c0 + target) / 2
  // with no extra rounding.
  return {(c0[0] + lambda * target[0]) / denom, (c0[1] + lambda * target[1]) / denom,
          (c0[2] + lambda * target[2]) / denom};
}

/// The adaptation objective at candidate c.
template <typename Scalar>
Scalar adaptation_objective(const LabColor<Scalar>& c, const LabColor<Scalar>& c0,
                            const LabColor<Scalar>& cast, Scalar lambda) {
  const Scalar fidelity = (c - c0).squaredNorm();
  const Scalar regular = (c - complement(cast)).squaredNorm();
  return fidelity + lambda * regular;
}

/// True iff candidate's objective does not exceed that of its six
/// neighbours displaced by +-1e-3 along each Lab axis.
template <typename Scalar>
bool verify_minimizer(const LabColor<Scalar>& c0, const LabColor<Scalar>& cast, Scalar lambda,
                      const LabColor<Scalar>& candidate) {
  const Scalar f = adaptation_objective(candidate, c0, cast, lambda);
  for (int axis = 0; axis < 3; ++axis) {
    for (const Scalar step : {Scalar(1e-3), Scalar(-1e-3)}) {
      LabColor<Scalar> probe = candidate;
      probe[axis] += step;
      if (adaptation_objective(probe, c0, cast, lambda) < f) return false;
    }
  }
  return true;
}

/// Per-pixel adaptation of img against a precomputed cast field.
template <typename Scalar>
RasterLab<Scalar> adapt(const RasterLab<Scalar>& img, const RasterLab<Scalar>& cast,
                        double lambda) {
  if (!img.same_size(cast)) throw std::invalid_argument("adapt: image and cast differ in size");
  if (!(lambda > 0.0)) throw std::invalid_argument("adapt: lambda must be > 0");
  const Scalar lam = static_cast<Scalar>(lambda);
  RasterLab<Scalar> out(img.width(), img.height());
  for (Eigen::Index y = 0; y < img.L.rows(); ++y) {
    for (Eigen::Index x = 0; x < img.L.cols(); ++x) {
      out.set(x, y, adapt_pixel(img.at(x, y), cast.at(x, y), lam));
    }
  }
  return out;
}

template <typename Scalar>
RasterLab<Scalar> adapt(const RasterLab<Scalar>& img, const RasterLab<Scalar>& cast,
                        const AdaptationParams& params) {
  params.validate();
  return adapt(img, cast, params.lambda);
}

}  // namespace uwcc
