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


// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <random>
#include <string>

#include "support/scenes.hpp"
#include "uwcc/adaptation.hpp"
#include "uwcc/batch.hpp"
#include "uwcc/colorspace.hpp"
#include "uwcc/enhancement.hpp"
#include "uwcc/gamut.hpp"
#include "uwcc/image_io.hpp"
#include "uwcc/pipeline.hpp"
#include "uwcc/uniformity.hpp"

namespace {

using namespace uwcc;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
using Lab = LabColor<double>;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), f, args...);
  return buf;
}

double hue_gap(double h1, double h2) {
  const double d = std::abs(h1 - h2);
  return std::min(d, 360.0 - d);
}

const GamutTable& table() {
  static const GamutTable t = GamutTable::build();
  return t;
}

Outcome closed_form_optimality() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> L(0, 100), ab(-128, 128), lam(1e-3, 100);
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const Lab c0(L(rng), ab(rng), ab(rng)), cast(L(rng), ab(rng), ab(rng));
    const double lambda = lam(rng);
    if (!verify_minimizer(c0, cast, lambda, adapt_pixel(c0, cast, lambda))) ++failures;
  }
  const double s = seconds_since(t0);
  return {failures == 0 && s < 1.0, fmt("%d/1000 tuples beaten by a neighbour, %.4f s", failures, s)};
}

Outcome unit_lambda_formulas() {
  std::size_t mismatches = 0, pixels = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const RasterRGB img = testing::random_image(97, 61, seed);
    const RasterLab<double> lab = srgb_to_lab(img);
    const RasterLab<double> cast = estimate_cast(lab, SigmaTriplet::from_base(default_sigma(97, 61), 3));
    const RasterLab<double> out = adapt(lab, cast, 1.0);
    for (Eigen::Index i = 0; i < lab.L.size(); ++i, ++pixels) {
      const bool same = out.L(i) == (lab.L(i) + (100 - cast.L(i))) / 2 &&
                        out.a(i) == (lab.a(i) - cast.a(i)) / 2 && out.b(i) == (lab.b(i) - cast.b(i)) / 2;
      if (!same) ++mismatches;
    }
  }
  return {mismatches == 0, fmt("%zu/%zu pixels differ bitwise", mismatches, pixels)};
}

Outcome hue_preservation() {
  PipelineStages st;
  correct_lab(srgb_to_lab(testing::random_image(256, 256, 3)), {}, table(), &st);
  double worst = 0;
  std::size_t checked = 0;
  for (Eigen::Index i = 0; i < st.adapted_clipped.L.size(); ++i) {
    const auto h0 = hue_angle(st.adapted_clipped.a(i), st.adapted_clipped.b(i));
    if (!h0) continue;
    for (const RasterLab<double>* s : {&st.stretched, &st.rescaled, &st.gamma, &st.robust}) {
      const auto h = hue_angle(s->a(i), s->b(i));
      if (!h) continue;
      worst = std::max(worst, hue_gap(*h, *h0));
      ++checked;
    }
  }
  return {worst <= 1e-6, fmt("max hue deviation %.3g deg over %zu stage pixels", worst, checked)};
}

Outcome hue_shift_validation() {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> rho(0.01, 10), gamma(-1, 1), rot(0, 2 * std::numbers::pi), cc(0.5, 60);
  double worst = 0;
  for (int i = 0; i < 10000; ++i) {
    const double r = rho(rng), g = gamma(rng), phi = rot(rng), c = cc(rng);
    const double s = std::sqrt(1 - g * g);
    const double ac = c * std::cos(phi), bc = c * std::sin(phi);
    const double a0 = r * c * (g * std::cos(phi) - s * std::sin(phi));
    const double b0 = r * c * (g * std::sin(phi) + s * std::cos(phi));
    // Hue change of the unit-weight adaptation, measured on the vectors.
    const Lab adapted = adapt_pixel(Lab(50, a0, b0), Lab(50, ac, bc), 1.0);
    const double measured = hue_gap(*hue_angle(a0, b0), *hue_angle(adapted[1], adapted[2]));
    worst = std::max(worst, std::abs(hue_shift_oracle(r, g) - measured));
  }
  const double g = 1 - 1e-6;
  const double below = hue_shift_oracle(0.5, g), at = hue_shift_oracle(1.0, g), above = hue_shift_oracle(2.0, g);
  const bool limits = std::abs(below - 180) <= 1 && std::abs(at - 90) <= 1 && std::abs(above) <= 1;
  return {worst <= 1e-6 && limits,
          fmt("max |oracle - measured| %.3g deg; limits %.4f / %.4f / %.4f", worst, below, at, above)};
}

Outcome gamut_soundness() {
  const GamutTable& t = table();
  std::mt19937_64 rng(5);
  std::size_t over = 0, clip_over = 0;
  double worst = -1e9;
  for (int i = 0; i < 1000000; ++i) {
    const std::uint64_t bits = rng();
    const Lab c = srgb8_to_lab(bits & 0xFF, (bits >> 8) & 0xFF, (bits >> 16) & 0xFF);
    const auto h = hue_angle(c[1], c[2]);
    if (!h) continue;
    const double excess = chroma(c[1], c[2]) - t.max_chroma(c[0], *h);
    worst = std::max(worst, excess);
    if (excess > 1.0) ++over;
    const Lab clipped = clip_to_gamut(t, c);
    const auto hc = hue_angle(clipped[1], clipped[2]);
    if (hc && chroma(clipped[1], clipped[2]) > t.max_chroma(clipped[0], *hc)) ++clip_over;
  }
  return {over == 0 && clip_over == 0,
          fmt("%zu colors beyond +1.0 (worst excess %.3f), %zu clipped colors beyond +0", over, worst, clip_over)};
}

Outcome round_trips() {
  int worst = 0;
  for (int r = 0; r < 32; ++r)
    for (int g = 0; g < 32; ++g)
      for (int b = 0; b < 32; ++b) {
        const int in[3] = {r * 255 / 31, g * 255 / 31, b * 255 / 31};
        const auto out = lab_to_srgb8(srgb8_to_lab(in[0], in[1], in[2]));
        for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(out[i] - in[i]));
      }
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> L(0, 100), C(0, 60), h(0, 360);
  double hk_worst = 0;
  for (int i = 0; i < 100000; ++i) {
    const double l = L(rng), c = C(rng), hue = h(rng);
    const HkInverse inv = hk_inverse(l, c, hue);
    if (inv.guarded) continue;
    hk_worst = std::max(hk_worst, std::abs(hk_perceived_lightness(inv.unclamped, c, hue) - l));
  }
  return {worst <= 1 && hk_worst <= 1e-9,
          fmt("lattice max channel error %d; H-K max error %.3g", worst, hk_worst)};
}

Outcome uniformity_values() {
  const double h = adjusted_blue_hue(10.0, 275.0, UniformityParams{});
  const double err = std::abs(h - (275.0 - 45.0 / std::sqrt(2.0)));
  const bool g_exact = hk_g(90.0) == 0.085 && hk_g(270.0) == 0.201;
  return {err <= 1e-9 && g_exact,
          fmt("h_adjust %.12f (err %.3g); g(90) %.17g, g(270) %.17g", h, err, hk_g(90.0), hk_g(270.0))};
}

Outcome cast_removal(const fs::path& work) {
  const RasterRGB cast = testing::shift_a(testing::natural_scene(800, 600), -25.0);

  const fs::path cache = work / "gamut.bin";
  auto t0 = Clock::now();
  const GamutTable built = GamutTable::load_or_build(cache, kDefaultGamutSamples, kDefaultGamutSeed);
  const double build_s = seconds_since(t0);
  t0 = Clock::now();
  const auto cached = GamutTable::load(cache, kDefaultGamutSamples, kDefaultGamutSeed);
  const double load_s = seconds_since(t0);
  const bool cache_ok = cached && *cached == built;

  t0 = Clock::now();
  const CorrectionResult res = correct_image(cast, {}, built);
  const double run_s = seconds_since(t0);

  const double mean_a = srgb_to_lab(res.image).a.mean();
  const double uiqm_in = uiqm(cast).score, uiqm_out = uiqm(res.image).score;
  const bool pass = mean_a >= -2 && mean_a <= 2 && uiqm_out > uiqm_in && run_s < 2 && build_s < 5 && cache_ok;
  return {pass, fmt("mean a* %.3f, UIQM %.4f -> %.4f, correction %.3f s, table build %.3f s, cached load %.4f s",
                    mean_a, uiqm_in, uiqm_out, run_s, build_s, load_s)};
}

Outcome eta_behaviour() {
  const RasterRGB cast = testing::shift_a(testing::natural_scene(800, 600), -25.0);
  double means[3] = {};
  const double etas[3] = {2, 4, 10};
  std::size_t count = 0;
  for (int k = 0; k < 3; ++k) {
    PipelineConfig cfg;
    cfg.eta = etas[k];
    PipelineStages st;
    const RasterLab<double> out = srgb_to_lab(correct_image(cast, cfg, table(), &st).image);
    double sum = 0;
    count = 0;
    for (Eigen::Index i = 0; i < out.L.size(); ++i) {
      if (st.theta(i) <= 90.0) continue;
      sum += chroma(out.a(i), out.b(i));
      ++count;
    }
    means[k] = count ? sum / count : 0.0;
  }
  return {count > 0 && means[0] < means[1] && means[1] < means[2],
          fmt("mean chroma over %zu pixels with theta > 90: %.3f / %.3f / %.3f", count, means[0], means[1],
              means[2])};
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(is), {}};
}

Outcome batch_determinism(const fs::path& work) {
  fs::create_directories(work / "in");
  for (int i = 0; i < 4; ++i) {
    const RasterRGB img = testing::shift_a(testing::natural_scene(160, 120, 20 + i), -15.0 * (i + 1) / 2);
    write_image(work / "in" / ("scene" + std::to_string(i) + (i % 2 ? ".jpg" : ".png")), img);
  }
  run_batch(work / "in", work / "run1", {}, table(), 2);
  run_batch(work / "in", work / "run2", {}, table(), 3);
  std::size_t files = 0, differing = 0;
  for (const auto& e : fs::directory_iterator(work / "run1")) {
    ++files;
    const fs::path twin = work / "run2" / e.path().filename();
    if (!fs::exists(twin) || slurp(e.path()) != slurp(twin)) ++differing;
  }
  return {files == 5 && differing == 0, fmt("%zu files compared (4 images + report), %zu differ", files, differing)};
}

}  // namespace

int main() {
  const fs::path work = fs::temp_directory_path() / ("uwcc_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(work);
  fs::create_directories(work);

  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"closed-form optimality", closed_form_optimality},
      {"unit-weight component formulas", unit_lambda_formulas},
      {"hue preservation through enhancement", hue_preservation},
      {"hue-shift sensitivity formula", hue_shift_validation},
      {"gamut soundness", gamut_soundness},
      {"round trips", round_trips},
      {"uniformity corrections", uniformity_values},
      {"cast removal", [&] { return cast_removal(work); }},
      {"eta increases non-cast chroma", eta_behaviour},
      {"batch determinism", [&] { return batch_determinism(work / "batch"); }},
  };

  int failed = 0, index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  fs::remove_all(work);
  return failed;
}
