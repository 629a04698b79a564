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

#include "uwcc/raster.hpp"

namespace uwcc {

// No-reference underwater quality scores.
//
// UCIQE (Yang & Sowmya, IEEE TIP 2015):
//   0.4680 * sigma_c + 0.2745 * con_l + 0.2576 * mu_s
//   sigma_c  standard deviation of CIELAB chroma, chroma scaled by 1/100
//   con_l    mean of the brightest 1% minus mean of the darkest 1% of L*/100
//   mu_s     mean of C*/L* over pixels with L* > 0
//
// UIQM (Panetta, Gao & Agaian, IEEE JOE 2016):
//   0.0282 * UICM + 0.2953 * UISM + 3.5753 * UIConM
//   UICM    -0.0268 * |mu_{RG,YB}| + 0.1586 * sqrt(var_RG + var_YB), with
//           RG = R - G, YB = (R + G)/2 - B on [0,255] channels and means
//           alpha-trimmed by 10% at each tail
//   UISM    sum over channels of w_c * EME(sobel_magnitude(c) * c), weights
//           (0.299, 0.587, 0.114); EME = 2/(k1 k2) sum log(max/min) over
//           blocks with positive extrema
//   UIConM  -1/(k1 k2) sum r log r, r = (max - min)/(max + min) over the RGB
//           values of each block; blocks with r = 0 contribute nothing
//   Blocks are 8x8; partial blocks at the right/bottom edges are dropped.

struct UciqeCoefficients {
  static constexpr double chroma_std = 0.4680;
  static constexpr double luminance_contrast = 0.2745;
  static constexpr double mean_saturation = 0.2576;
};

struct UiqmCoefficients {
  static constexpr double uicm = 0.0282;
  static constexpr double uism = 0.2953;
  static constexpr double uiconm = 3.5753;
};

inline constexpr int kMetricBlockSize = 8;

struct UciqeResult {
  double score = 0;
  double chroma_std = 0;
  double luminance_contrast = 0;
  double mean_saturation = 0;
};

struct UiqmResult {
  double score = 0;
  double uicm = 0;
  double uism = 0;
  double uiconm = 0;
};

struct QualityReport {
  UciqeResult uciqe;
  UiqmResult uiqm;
};

UciqeResult uciqe(const RasterRGB& img);
UiqmResult uiqm(const RasterRGB& img);
QualityReport assess(const RasterRGB& img);

}  // namespace uwcc
