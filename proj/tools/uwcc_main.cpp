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

// uwcc: underwater color-cast correction.
//
//   uwcc correct <in> <out> [--eta F] [--beta F] [--lambda F] [--sigma0 F] [--n F]
//                           [--config PATH] [--metrics] [--dump-stages DIR]
//   uwcc batch <in_dir> <out_dir> [same flags]
//   uwcc gamut build [--samples N] [--seed N] [--cache PATH]
//   uwcc score <image>
//
// Exit codes: 0 success, 1 usage error, 2 I/O error, 3 processing error.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "uwcc/batch.hpp"
#include "uwcc/config.hpp"
#include "uwcc/gamut.hpp"
#include "uwcc/image_io.hpp"
#include "uwcc/metrics.hpp"
#include "uwcc/pipeline.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kIo = 2, kProcessing = 3 };

struct TuningFlags {
  std::optional<double> eta, beta, lambda, sigma0, n;
  std::string config_path;
  std::string cache_path;
  bool metrics = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--eta", eta, "Chroma enhancement exponent (>= 1)");
    cmd->add_option("--beta", beta, "Robust factor exponent in (0,1]");
    cmd->add_option("--lambda", lambda, "Adaptation weight (> 0)");
    cmd->add_option("--sigma0", sigma0, "Chromatic blur sigma in pixels (default: from image size)");
    cmd->add_option("--n", n, "Lightness blur multiplier (> 1)");
    cmd->add_option("--config", config_path, "Key-value config file; flags override it");
    cmd->add_option("--cache", cache_path, "Gamut table cache file");
    cmd->add_flag("--metrics", metrics, "Print UCIQE/UIQM before and after");
  }

  uwcc::PipelineConfig resolve() const {
    uwcc::PipelineConfig cfg =
        config_path.empty() ? uwcc::PipelineConfig{} : uwcc::PipelineConfig::load(config_path);
    if (eta) cfg.eta = *eta;
    if (beta) cfg.beta = *beta;
    if (lambda) cfg.lambda = *lambda;
    if (sigma0) cfg.sigma0 = *sigma0;
    if (n) cfg.n = *n;
    if (metrics) cfg.emit_metrics = true;
    cfg.validate();
    return cfg;
  }

  std::filesystem::path cache_for(const uwcc::PipelineConfig& cfg) const {
    return cache_path.empty() ? uwcc::default_gamut_cache_path(cfg.gamut_samples, cfg.gamut_seed)
                              : std::filesystem::path(cache_path);
  }
};

uwcc::GamutTable load_table(const uwcc::PipelineConfig& cfg, const std::filesystem::path& cache) {
  return uwcc::GamutTable::load_or_build(cache, cfg.gamut_samples, cfg.gamut_seed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Color-cast removal for underwater photographs, working in CIELAB"};
  app.require_subcommand(1);

  TuningFlags correct_flags;
  std::string correct_in, correct_out, dump_dir;
  CLI::App* correct = app.add_subcommand("correct", "Correct one image");
  correct->add_option("input", correct_in, "Input PNG/JPEG")->required();
  correct->add_option("output", correct_out, "Output path (.png or .jpg)")->required();
  correct->add_option("--dump-stages", dump_dir, "Write 16-bit PNGs of every stage here");
  correct_flags.attach(correct);

  TuningFlags batch_flags;
  std::string batch_in, batch_out;
  unsigned jobs = 0;
  CLI::App* batch = app.add_subcommand("batch", "Correct every image in a directory");
  batch->add_option("input_dir", batch_in)->required();
  batch->add_option("output_dir", batch_out)->required();
  batch->add_option("--jobs", jobs, "Worker threads (default: hardware concurrency)");
  batch_flags.attach(batch);

  std::size_t samples = uwcc::kDefaultGamutSamples;
  std::uint64_t seed = uwcc::kDefaultGamutSeed;
  std::string gamut_cache;
  CLI::App* gamut = app.add_subcommand("gamut", "Gamut table maintenance");
  gamut->require_subcommand(1);
  CLI::App* gamut_build = gamut->add_subcommand("build", "Build and cache the gamut table");
  gamut_build->add_option("--samples", samples, "RGB cube samples")->check(CLI::Range(10000, 100000000));
  gamut_build->add_option("--seed", seed, "Sampling seed");
  gamut_build->add_option("--cache", gamut_cache, "Cache file to write");

  std::string score_in;
  CLI::App* score = app.add_subcommand("score", "Print UCIQE/UIQM of an image");
  score->add_option("image", score_in)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*correct) {
      const uwcc::PipelineConfig cfg = correct_flags.resolve();
      const uwcc::RasterRGB img = uwcc::read_image(correct_in);
      const uwcc::GamutTable table = load_table(cfg, correct_flags.cache_for(cfg));
      uwcc::PipelineStages stages;
      const bool dump = !dump_dir.empty() || cfg.emit_intermediates;
      uwcc::CorrectionResult res = uwcc::correct_image(img, cfg, table, dump ? &stages : nullptr);
      uwcc::write_image(correct_out, res.image);
      if (dump) {
        uwcc::dump_stages(stages, dump_dir.empty() ? std::filesystem::path(correct_out).replace_extension("") += "_stages"
                                                   : std::filesystem::path(dump_dir));
      }
      if (res.diagnostics.hk_guarded > 0) {
        std::cerr << "note: " << res.diagnostics.hk_guarded
                  << " pixel(s) hit the H-K denominator guard\n";
      }
      if (res.after) {
        std::cout << uwcc::quality_to_json(std::filesystem::path(correct_in).filename().string(),
                                           &*res.before, *res.after)
                  << '\n';
      }
    } else if (*batch) {
      const uwcc::PipelineConfig cfg = batch_flags.resolve();
      const uwcc::GamutTable table = load_table(cfg, batch_flags.cache_for(cfg));
      const uwcc::BatchReport report = uwcc::run_batch(batch_in, batch_out, cfg, table, jobs);
      std::cout << report.entries.size() << " corrected, " << report.skipped.size()
                << " skipped; report: " << (std::filesystem::path(batch_out) / uwcc::kBatchReportName).string()
                << '\n';
      if (report.entries.empty()) return kProcessing;
    } else if (*gamut_build) {
      const std::filesystem::path cache =
          gamut_cache.empty() ? uwcc::default_gamut_cache_path(samples, seed) : std::filesystem::path(gamut_cache);
      const auto t0 = std::chrono::steady_clock::now();
      const uwcc::GamutTable table = uwcc::GamutTable::build(samples, seed);
      const auto t1 = std::chrono::steady_clock::now();
      table.save(cache);
      std::cout << "built gamut table (" << samples << " samples, seed " << seed << ") in "
                << std::chrono::duration<double>(t1 - t0).count() << " s -> " << cache.string() << '\n';
    } else if (*score) {
      const uwcc::RasterRGB img = uwcc::read_image(score_in);
      const uwcc::QualityReport q = uwcc::assess(img);
      std::cout << uwcc::quality_to_json(std::filesystem::path(score_in).filename().string(), nullptr, q)
                << '\n';
    }
  } catch (const uwcc::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const uwcc::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const uwcc::BatchError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kProcessing;
  }
  return kOk;
}
