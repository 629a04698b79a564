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

#include "uwcc/batch.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

#include <json.hpp>

#include "uwcc/image_io.hpp"
#include "uwcc/pipeline.hpp"

namespace uwcc {

namespace {

using nlohmann::json;

json uciqe_json(const UciqeResult& r) {
  return {{"score", r.score},
          {"chroma_std", r.chroma_std},
          {"luminance_contrast", r.luminance_contrast},
          {"mean_saturation", r.mean_saturation}};
}

json uiqm_json(const UiqmResult& r) {
  return {{"score", r.score}, {"uicm", r.uicm}, {"uism", r.uism}, {"uiconm", r.uiconm}};
}

json entry_json(const std::string& file, const QualityReport* before, const QualityReport& after) {
  json j;
  j["file"] = file;
  if (before) {
    j["uciqe_before"] = before->uciqe.score;
    j["uiqm_before"] = before->uiqm.score;
  }
  // A lone score (no correction) is reported under plain names.
  const char* suffix = before ? "_after" : "";
  j[std::string("uciqe") + suffix] = after.uciqe.score;
  j[std::string("uiqm") + suffix] = after.uiqm.score;
  json components;
  if (before) components["before"] = {{"uciqe", uciqe_json(before->uciqe)}, {"uiqm", uiqm_json(before->uiqm)}};
  components[before ? "after" : "image"] = {{"uciqe", uciqe_json(after.uciqe)}, {"uiqm", uiqm_json(after.uiqm)}};
  j["components"] = std::move(components);
  return j;
}

json config_json(const PipelineConfig& c) {
  json j = {{"eta", c.eta},
            {"beta", c.beta},
            {"lambda", c.lambda},
            {"n", c.n},
            {"mu_deg", c.mu_deg},
            {"m", c.m},
            {"stretch", c.stretch},
            {"stretch_lo", c.stretch_lo},
            {"stretch_hi", c.stretch_hi},
            {"stretch_target_lo", c.stretch_target_lo},
            {"stretch_target_hi", c.stretch_target_hi},
            {"gamut_samples", c.gamut_samples},
            {"gamut_seed", c.gamut_seed}};
  j["sigma0"] = c.sigma0 ? json(*c.sigma0) : json("auto");
  return j;
}

}  // namespace

std::string quality_to_json(const std::string& file, const QualityReport* before,
                            const QualityReport& after) {
  return entry_json(file, before, after).dump(2);
}

std::string report_to_json(const BatchReport& report) {
  json j;
  j["config"] = config_json(report.config);
  j["images"] = json::array();
  for (const BatchEntry& e : report.entries) j["images"].push_back(entry_json(e.file, &e.before, e.after));
  j["skipped"] = json::array();
  for (const BatchSkip& s : report.skipped) j["skipped"].push_back({{"file", s.file}, {"reason", s.reason}});
  return j.dump(2) + "\n";
}

BatchReport run_batch(const std::filesystem::path& input_dir,
                      const std::filesystem::path& output_dir, const PipelineConfig& cfg,
                      const GamutTable& table, unsigned workers) {
  cfg.validate();
  std::error_code ec;
  if (!std::filesystem::is_directory(input_dir, ec)) {
    throw BatchError("batch: not a readable directory: " + input_dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(input_dir)) {
    if (entry.is_regular_file() && is_supported_image(entry.path())) files.push_back(entry.path());
  }
  if (files.empty()) throw BatchError("batch: no PNG or JPEG images in " + input_dir.string());
  std::sort(files.begin(), files.end());
  std::filesystem::create_directories(output_dir);

  struct Slot {
    std::optional<BatchEntry> entry;
    std::optional<BatchSkip> skip;
  };
  std::vector<Slot> slots(files.size());
  PipelineConfig run_cfg = cfg;
  run_cfg.emit_metrics = true;

  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < files.size();) {
      const std::string name = files[i].filename().string();
      try {
        const RasterRGB img = read_image(files[i]);
        const CorrectionResult res = correct_image(img, run_cfg, table);
        write_image(output_dir / name, res.image);
        slots[i].entry = BatchEntry{name, *res.before, *res.after};
      } catch (const std::exception& e) {
        slots[i].skip = BatchSkip{name, e.what()};
      }
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, files.size()));
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  pool.clear();

  BatchReport report;
  report.config = cfg;
  for (Slot& s : slots) {
    if (s.entry) report.entries.push_back(std::move(*s.entry));
    if (s.skip) {
      std::cerr << "skipped " << s.skip->file << ": " << s.skip->reason << '\n';
      report.skipped.push_back(std::move(*s.skip));
    }
  }
  std::ofstream os(output_dir / kBatchReportName, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("batch: cannot write report in " + output_dir.string());
  os << report_to_json(report);
  return report;
}

}  // namespace uwcc
