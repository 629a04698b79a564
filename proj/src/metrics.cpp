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

#include "uwcc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "uwcc/colorspace.hpp"
#include "uwcc/filtering.hpp"

namespace uwcc {

namespace {

using PlaneD = Plane<double>;

double alpha_trimmed_mean(std::vector<double> values, double alpha_lo, double alpha_hi) {
  std::sort(values.begin(), values.end());
  const std::size_t k = values.size();
  const auto lo = static_cast<std::size_t>(std::ceil(alpha_lo * static_cast<double>(k)));
  const auto hi = static_cast<std::size_t>(std::floor(alpha_hi * static_cast<double>(k)));
  if (lo + hi >= k) return 0.0;
  double sum = 0.0;
  for (std::size_t i = lo; i < k - hi; ++i) sum += values[i];
  return sum / static_cast<double>(k - lo - hi);
}

double variance_about(const std::vector<double>& values, double mu) {
  double s = 0.0;
  for (double v : values) s += (v - mu) * (v - mu);
  return s / static_cast<double>(values.size());
}

PlaneD channel(const RasterRGB& img, int c) {
  PlaneD p(img.height(), img.width());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) p(y, x) = img.pixel(x, y)[c];
  }
  return p;
}

PlaneD sobel_magnitude(const PlaneD& p) {
  const Eigen::Index h = p.rows(), w = p.cols();
  PlaneD out(h, w);
  auto at = [&](Eigen::Index y, Eigen::Index x) { return p(mirror_index(y, h), mirror_index(x, w)); };
  for (Eigen::Index y = 0; y < h; ++y) {
    for (Eigen::Index x = 0; x < w; ++x) {
      const double gx = (at(y - 1, x + 1) + 2 * at(y, x + 1) + at(y + 1, x + 1)) -
                        (at(y - 1, x - 1) + 2 * at(y, x - 1) + at(y + 1, x - 1));
      const double gy = (at(y + 1, x - 1) + 2 * at(y + 1, x) + at(y + 1, x + 1)) -
                        (at(y - 1, x - 1) + 2 * at(y - 1, x) + at(y - 1, x + 1));
      out(y, x) = std::hypot(gx, gy);
    }
  }
  return out;
}

// Visits every full block; fn receives its (min, max).
void for_each_block(Eigen::Index rows, Eigen::Index cols,
                    const std::function<std::pair<double, double>(Eigen::Index, Eigen::Index)>& extrema,
                    const std::function<void(double, double)>& fn) {
  const Eigen::Index k2 = rows / kMetricBlockSize, k1 = cols / kMetricBlockSize;
  for (Eigen::Index by = 0; by < k2; ++by) {
    for (Eigen::Index bx = 0; bx < k1; ++bx) {
      const auto [lo, hi] = extrema(by * kMetricBlockSize, bx * kMetricBlockSize);
      fn(lo, hi);
    }
  }
}

double eme(const PlaneD& p) {
  const Eigen::Index k2 = p.rows() / kMetricBlockSize, k1 = p.cols() / kMetricBlockSize;
  if (k1 == 0 || k2 == 0) return 0.0;
  double sum = 0.0;
  for_each_block(
      p.rows(), p.cols(),
      [&](Eigen::Index y, Eigen::Index x) {
        const auto block = p.block(y, x, kMetricBlockSize, kMetricBlockSize);
        return std::pair{block.minCoeff(), block.maxCoeff()};
      },
      [&](double lo, double hi) {
        if (lo > 0.0 && hi > 0.0) sum += std::log(hi / lo);
      });
  return 2.0 / static_cast<double>(k1 * k2) * sum;
}

double log_amee(const PlaneD& r, const PlaneD& g, const PlaneD& b) {
  const Eigen::Index k2 = r.rows() / kMetricBlockSize, k1 = r.cols() / kMetricBlockSize;
  if (k1 == 0 || k2 == 0) return 0.0;
  double sum = 0.0;
  for_each_block(
      r.rows(), r.cols(),
      [&](Eigen::Index y, Eigen::Index x) {
        double lo = 255.0, hi = 0.0;
        for (const PlaneD* p : {&r, &g, &b}) {
          const auto block = p->block(y, x, kMetricBlockSize, kMetricBlockSize);
          lo = std::min(lo, block.minCoeff());
          hi = std::max(hi, block.maxCoeff());
        }
        return std::pair{lo, hi};
      },
      [&](double lo, double hi) {
        const double top = hi - lo, bot = hi + lo;
        if (top > 0.0 && bot > 0.0) sum += (top / bot) * std::log(top / bot);
      });
  return -sum / static_cast<double>(k1 * k2);
}

}  // namespace

UciqeResult uciqe(const RasterRGB& img) {
  const std::size_t n = img.pixel_count();
  std::vector<double> lightness(n), chroma_values(n);
  double sat_sum = 0.0;
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const std::uint8_t* p = img.pixel(x, y);
      const LabColor<double> lab = srgb8_to_lab(p[0], p[1], p[2]);
      const std::size_t i = static_cast<std::size_t>(y) * img.width() + x;
      const double c = chroma(lab[1], lab[2]);
      lightness[i] = lab[0] / 100.0;
      chroma_values[i] = c / 100.0;
      if (lab[0] > 0.0) sat_sum += c / lab[0];
    }
  }

  UciqeResult r;
  double mean_c = 0.0;
  for (double c : chroma_values) mean_c += c;
  mean_c /= static_cast<double>(n);
  r.chroma_std = std::sqrt(variance_about(chroma_values, mean_c));

  std::sort(lightness.begin(), lightness.end());
  const std::size_t tail = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(0.01 * n)));
  double top = 0.0, bottom = 0.0;
  for (std::size_t i = 0; i < tail; ++i) {
    bottom += lightness[i];
    top += lightness[n - 1 - i];
  }
  r.luminance_contrast = (top - bottom) / static_cast<double>(tail);
  r.mean_saturation = sat_sum / static_cast<double>(n);

  r.score = UciqeCoefficients::chroma_std * r.chroma_std +
            UciqeCoefficients::luminance_contrast * r.luminance_contrast +
            UciqeCoefficients::mean_saturation * r.mean_saturation;
  return r;
}

UiqmResult uiqm(const RasterRGB& img) {
  const PlaneD r = channel(img, 0), g = channel(img, 1), b = channel(img, 2);

  UiqmResult out;
  {
    std::vector<double> rg(r.size()), yb(r.size());
    for (Eigen::Index i = 0; i < r.size(); ++i) {
      rg[i] = r(i) - g(i);
      yb[i] = (r(i) + g(i)) / 2.0 - b(i);
    }
    const double mu_rg = alpha_trimmed_mean(rg, 0.1, 0.1);
    const double mu_yb = alpha_trimmed_mean(yb, 0.1, 0.1);
    const double var = variance_about(rg, mu_rg) + variance_about(yb, mu_yb);
    out.uicm = -0.0268 * std::hypot(mu_rg, mu_yb) + 0.1586 * std::sqrt(var);
  }

  out.uism = 0.299 * eme(sobel_magnitude(r) * r) + 0.587 * eme(sobel_magnitude(g) * g) +
             0.114 * eme(sobel_magnitude(b) * b);
  out.uiconm = log_amee(r, g, b);

  out.score = UiqmCoefficients::uicm * out.uicm + UiqmCoefficients::uism * out.uism +
              UiqmCoefficients::uiconm * out.uiconm;
  return out;
}

QualityReport assess(const RasterRGB& img) { return {uciqe(img), uiqm(img)}; }

}  // namespace uwcc
