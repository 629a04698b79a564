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
#include <filesystem>
#include <optional>

#include "uwcc/config.hpp"
#include "uwcc/gamut.hpp"
#include "uwcc/metrics.hpp"
#include "uwcc/raster.hpp"

namespace uwcc {

/// Intermediate fields of one correction, in execution order.
struct PipelineStages {
  RasterLab<double> input;            // 1  sRGB -> Lab
  RasterLab<double> blue_adjusted;    // 2  blue-region hue linearization
  RasterLab<double> cast;             // 3  blurred cast field
  RasterLab<double> adapted;          // 4  complementary adaptation
  RasterLab<double> adapted_clipped;  // 5  gamut clip
  RasterLab<double> stretched;        // 6  stretched L, adapted a/b
  RasterLab<double> rescaled;         // 7  chroma carried to the new slice
  RasterLab<double> gamma;            // 8  gamma-enhanced chroma
  RasterLab<double> robust;           // 9  robust factor applied
  RasterLab<double> hk_adjusted;      // 10 lightness compensated for H-K brightening
  RasterLab<double> output;           // 11 final gamut clip
  Plane<double> theta;                // hue difference to the cast, degrees
  Plane<double> robust_factor;
};

struct CorrectionDiagnostics {
  std::size_t clipped_after_adapt = 0;
  std::size_t clipped_final = 0;
  std::size_t hk_guarded = 0;  // pixels whose H-K denominator hit the guard
};

struct CorrectionResult {
  RasterRGB image;
  std::optional<QualityReport> before;
  std::optional<QualityReport> after;
  CorrectionDiagnostics diagnostics;
};

/// Runs the Lab part of the pipeline (stages 2-11). When stages is non-null
/// every intermediate is stored there.
RasterLab<double> correct_lab(const RasterLab<double>& input, const PipelineConfig& cfg,
                              const GamutTable& table, PipelineStages* stages = nullptr,
                              CorrectionDiagnostics* diagnostics = nullptr);

/// Full correction of an 8-bit image. Metrics are computed on the input and
/// the encoded output when cfg.emit_metrics is set.
CorrectionResult correct_image(const RasterRGB& img, const PipelineConfig& cfg,
                               const GamutTable& table, PipelineStages* stages = nullptr);

/// Writes every stage plane as a 16-bit PNG plus an encoding.txt describing
/// the value mapping.
void dump_stages(const PipelineStages& stages, const std::filesystem::path& dir);

/// Value mappings used by dump_stages.
inline double encode_lightness16(double L) { return L / 100.0 * 65535.0; }
inline double encode_opponent16(double v) { return (v + 128.0) / 256.0 * 65535.0; }
inline double encode_angle16(double deg) { return deg / 180.0 * 65535.0; }

}  // namespace uwcc
