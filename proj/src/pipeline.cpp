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

#include "uwcc/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "uwcc/adaptation.hpp"
#include "uwcc/colorspace.hpp"
#include "uwcc/enhancement.hpp"
#include "uwcc/filtering.hpp"
#include "uwcc/image_io.hpp"
#include "uwcc/uniformity.hpp"

namespace uwcc {

namespace {

RasterLab<double> clip_image(const RasterLab<double>& img, const GamutTable& table,
                             std::size_t& clipped) {
  RasterLab<double> out(img.width(), img.height());
  for (Eigen::Index y = 0; y < img.L.rows(); ++y) {
    for (Eigen::Index x = 0; x < img.L.cols(); ++x) {
      LabColor<double> c = img.at(x, y);
      c[0] = std::clamp(c[0], 0.0, 100.0);
      const LabColor<double> clipped_c = clip_to_gamut(table, c);
      if (clipped_c != c) ++clipped;
      out.set(x, y, clipped_c);
    }
  }
  return out;
}

}  // namespace

RasterLab<double> correct_lab(const RasterLab<double>& input, const PipelineConfig& cfg,
                              const GamutTable& table, PipelineStages* stages,
                              CorrectionDiagnostics* diagnostics) {
  cfg.validate();
  const int width = input.width(), height = input.height();
  const AdaptationParams adapt_params = cfg.adaptation_params(width, height);
  const EnhanceParams enhance = cfg.enhance_params();
  CorrectionDiagnostics diag;

  RasterLab<double> adjusted = adjust_blue_hue(input, cfg.uniformity_params());
  RasterLab<double> cast = estimate_cast(adjusted, adapt_params.sigmas());
  RasterLab<double> adapted = adapt(adjusted, cast, adapt_params);
  RasterLab<double> clipped = clip_image(adapted, table, diag.clipped_after_adapt);

  const Plane<double> L_hat = cfg.stretch ? stretch_lightness(clipped.L, enhance) : clipped.L;

  RasterLab<double> rescaled(width, height), enhanced(width, height), robust(width, height),
      hk(width, height);
  Plane<double> theta(height, width), factor(height, width);
  for (Eigen::Index i = 0; i < clipped.L.size(); ++i) {
    const double L_adapt = clipped.L(i), a_adapt = clipped.a(i), b_adapt = clipped.b(i);
    const double C_adapt = chroma(a_adapt, b_adapt);
    const auto h = hue_angle(a_adapt, b_adapt);

    // Chroma changes are applied by scaling the adapted (a*, b*) vector so the
    // hue angle is carried through untouched.
    double C1 = 0.0, C2 = 0.0;
    if (h) {
      C1 = rescale_chroma(C_adapt, L_adapt, L_hat(i), *h, table);
      C2 = gamma_enhance_chroma(C1, L_hat(i), *h, enhance.eta, table);
    }
    const double s1 = h ? C1 / C_adapt : 0.0;
    const double s2 = h ? C2 / C_adapt : 0.0;

    theta(i) = hue_difference(adjusted.a(i), adjusted.b(i), cast.a(i), cast.b(i));
    factor(i) = robust_factor(theta(i), enhance.beta);
    const auto [a_hat, b_hat] = apply_robust(s2 * a_adapt, s2 * b_adapt, factor(i));

    rescaled.L(i) = enhanced.L(i) = robust.L(i) = L_hat(i);
    rescaled.a(i) = s1 * a_adapt;
    rescaled.b(i) = s1 * b_adapt;
    enhanced.a(i) = s2 * a_adapt;
    enhanced.b(i) = s2 * b_adapt;
    robust.a(i) = a_hat;
    robust.b(i) = b_hat;

    const HkInverse inv = hk_inverse(L_hat(i), factor(i) * C2, h.value_or(0.0));
    if (inv.guarded) ++diag.hk_guarded;
    hk.L(i) = inv.value;
    hk.a(i) = a_hat;
    hk.b(i) = b_hat;
  }

  RasterLab<double> output = clip_image(hk, table, diag.clipped_final);

  if (diagnostics) *diagnostics = diag;
  if (stages) {
    stages->input = input;
    stages->blue_adjusted = std::move(adjusted);
    stages->cast = std::move(cast);
    stages->adapted = std::move(adapted);
    stages->stretched = clipped;
    stages->stretched.L = L_hat;
    stages->adapted_clipped = std::move(clipped);
    stages->rescaled = std::move(rescaled);
    stages->gamma = std::move(enhanced);
    stages->robust = std::move(robust);
    stages->hk_adjusted = std::move(hk);
    stages->output = output;
    stages->theta = std::move(theta);
    stages->robust_factor = std::move(factor);
  }
  return output;
}

CorrectionResult correct_image(const RasterRGB& img, const PipelineConfig& cfg,
                               const GamutTable& table, PipelineStages* stages) {
  CorrectionResult result;
  const RasterLab<double> lab = srgb_to_lab(img);
  const RasterLab<double> out = correct_lab(lab, cfg, table, stages, &result.diagnostics);
  result.image = lab_to_srgb(out);
  if (cfg.emit_metrics) {
    result.before = assess(img);
    result.after = assess(result.image);
  }
  return result;
}

void dump_stages(const PipelineStages& stages, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto write_plane = [&](const std::string& name, const Plane<double>& p,
                               const std::function<double(double)>& encode) {
    std::vector<std::uint16_t> samples(static_cast<std::size_t>(p.size()));
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      samples[i] = static_cast<std::uint16_t>(std::lround(std::clamp(encode(p(i)), 0.0, 65535.0)));
    }
    write_png_gray16(dir / (name + ".png"), static_cast<int>(p.cols()), static_cast<int>(p.rows()),
                     samples);
  };
  const auto write_lab = [&](const std::string& name, const RasterLab<double>& img) {
    write_plane(name + "_L", img.L, encode_lightness16);
    write_plane(name + "_a", img.a, encode_opponent16);
    write_plane(name + "_b", img.b, encode_opponent16);
  };

  write_lab("01_input", stages.input);
  write_lab("02_blue_adjusted", stages.blue_adjusted);
  write_lab("03_cast", stages.cast);
  write_lab("04_adapted", stages.adapted);
  write_lab("05_adapted_clipped", stages.adapted_clipped);
  write_lab("06_stretched", stages.stretched);
  write_lab("07_rescaled", stages.rescaled);
  write_lab("08_gamma", stages.gamma);
  write_lab("09_robust", stages.robust);
  write_lab("10_hk_adjusted", stages.hk_adjusted);
  write_lab("11_output", stages.output);
  write_plane("09_theta", stages.theta, encode_angle16);
  write_plane("09_robust_factor", stages.robust_factor, [](double f) { return f * 65535.0; });

  std::ofstream os(dir / "encoding.txt");
  os << "16-bit grayscale PNG per plane; sample = round(clamp(f(v), 0, 65535))\n"
        "*_L.png            f(L) = L / 100 * 65535\n"
        "*_a.png, *_b.png   f(v) = (v + 128) / 256 * 65535\n"
        "09_theta.png       f(deg) = deg / 180 * 65535\n"
        "09_robust_factor   f(F) = F * 65535\n";
}

}  // namespace uwcc
