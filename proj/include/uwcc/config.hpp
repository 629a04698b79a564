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
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "uwcc/adaptation.hpp"
#include "uwcc/enhancement.hpp"
#include "uwcc/gamut.hpp"
#include "uwcc/uniformity.hpp"

namespace uwcc {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every tunable of the correction pipeline.
struct PipelineConfig {
  double eta = 10.0;
  double beta = 0.25;
  double lambda = 1.0;
  double n = 3.0;
  std::optional<double> sigma0;  // empty: derived from the image size
  double mu_deg = 45.0;
  double m = 7.0;
  bool stretch = true;  // false skips the lightness stretch
  double stretch_lo = 1.0;
  double stretch_hi = 99.0;
  double stretch_target_lo = 5.0;
  double stretch_target_hi = 95.0;
  std::size_t gamut_samples = kDefaultGamutSamples;
  std::uint64_t gamut_seed = kDefaultGamutSeed;
  bool emit_metrics = false;
  bool emit_intermediates = false;

  void validate() const;

  EnhanceParams enhance_params() const {
    return {eta, beta, stretch_lo, stretch_hi, stretch_target_lo, stretch_target_hi};
  }
  UniformityParams uniformity_params() const { return {mu_deg, m}; }
  AdaptationParams adaptation_params(int width, int height) const;

  /// Sets one field from its text form; unknown keys and bad values throw.
  void set(std::string_view key, std::string_view value);

  /// "key = value" lines in a fixed order; parse(to_text()) round-trips.
  std::string to_text() const;
  static PipelineConfig parse(std::string_view text);
  static PipelineConfig load(const std::filesystem::path& path);

  bool operator==(const PipelineConfig&) const = default;
};

}  // namespace uwcc
