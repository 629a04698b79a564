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

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "uwcc/config.hpp"
#include "uwcc/gamut.hpp"
#include "uwcc/metrics.hpp"

namespace uwcc {

class BatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BatchEntry {
  std::string file;
  QualityReport before;
  QualityReport after;
};

struct BatchSkip {
  std::string file;
  std::string reason;
};

struct BatchReport {
  std::vector<BatchEntry> entries;  // sorted by file name
  std::vector<BatchSkip> skipped;
  PipelineConfig config;
};

inline constexpr const char* kBatchReportName = "report.json";

/// Corrects every PNG/JPEG in input_dir into output_dir under the same file
/// name and writes report.json there. Files that fail are skipped and listed;
/// a directory without any supported image throws BatchError.
BatchReport run_batch(const std::filesystem::path& input_dir,
                      const std::filesystem::path& output_dir, const PipelineConfig& cfg,
                      const GamutTable& table, unsigned workers = 0);

/// JSON document with one entry per corrected image and the config echo.
std::string report_to_json(const BatchReport& report);

/// Single-image report in the same schema as a batch entry. Without before
/// the scores are emitted as plain "uciqe"/"uiqm".
std::string quality_to_json(const std::string& file, const QualityReport* before,
                            const QualityReport& after);

}  // namespace uwcc
