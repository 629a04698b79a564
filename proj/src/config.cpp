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

#include "uwcc/config.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "uwcc/filtering.hpp"

namespace uwcc {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
  if (res.ec != std::errc() || res.ptr != value.data() + value.size()) {
    throw ConfigError("config: invalid value '" + std::string(value) + "' for " + std::string(key));
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw ConfigError("config: invalid boolean '" + std::string(value) + "' for " + std::string(key));
}

}  // namespace

void PipelineConfig::validate() const {
  try {
    enhance_params().validate();
    uniformity_params().validate();
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
    if (!(n > 1.0)) throw std::invalid_argument("n must be > 1");
    if (sigma0 && !(*sigma0 > 0.0)) throw std::invalid_argument("sigma0 must be > 0");
    if (gamut_samples < 10000) throw std::invalid_argument("gamut_samples must be >= 10000");
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

AdaptationParams PipelineConfig::adaptation_params(int width, int height) const {
  AdaptationParams p;
  p.lambda = lambda;
  p.n = n;
  p.sigma0 = sigma0 ? *sigma0 : default_sigma(width, height);
  return p;
}

void PipelineConfig::set(std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "eta") eta = parse_number<double>(key, value);
  else if (key == "beta") beta = parse_number<double>(key, value);
  else if (key == "lambda") lambda = parse_number<double>(key, value);
  else if (key == "n") n = parse_number<double>(key, value);
  else if (key == "sigma0") {
    if (value == "auto") sigma0.reset();
    else sigma0 = parse_number<double>(key, value);
  }
  else if (key == "mu_deg") mu_deg = parse_number<double>(key, value);
  else if (key == "m") m = parse_number<double>(key, value);
  else if (key == "stretch") stretch = parse_bool(key, value);
  else if (key == "stretch_lo") stretch_lo = parse_number<double>(key, value);
  else if (key == "stretch_hi") stretch_hi = parse_number<double>(key, value);
  else if (key == "stretch_target_lo") stretch_target_lo = parse_number<double>(key, value);
  else if (key == "stretch_target_hi") stretch_target_hi = parse_number<double>(key, value);
  else if (key == "gamut_samples") gamut_samples = parse_number<std::size_t>(key, value);
  else if (key == "gamut_seed") gamut_seed = parse_number<std::uint64_t>(key, value);
  else if (key == "emit_metrics") emit_metrics = parse_bool(key, value);
  else if (key == "emit_intermediates") emit_intermediates = parse_bool(key, value);
  else throw ConfigError("config: unknown key '" + std::string(key) + "'");
}

std::string PipelineConfig::to_text() const {
  std::ostringstream os;
  os << "eta = " << format_double(eta) << '\n'
     << "beta = " << format_double(beta) << '\n'
     << "lambda = " << format_double(lambda) << '\n'
     << "n = " << format_double(n) << '\n'
     << "sigma0 = " << (sigma0 ? format_double(*sigma0) : std::string("auto")) << '\n'
     << "mu_deg = " << format_double(mu_deg) << '\n'
     << "m = " << format_double(m) << '\n'
     << "stretch = " << (stretch ? "true" : "false") << '\n'
     << "stretch_lo = " << format_double(stretch_lo) << '\n'
     << "stretch_hi = " << format_double(stretch_hi) << '\n'
     << "stretch_target_lo = " << format_double(stretch_target_lo) << '\n'
     << "stretch_target_hi = " << format_double(stretch_target_hi) << '\n'
     << "gamut_samples = " << gamut_samples << '\n'
     << "gamut_seed = " << gamut_seed << '\n'
     << "emit_metrics = " << (emit_metrics ? "true" : "false") << '\n'
     << "emit_intermediates = " << (emit_intermediates ? "true" : "false") << '\n';
  return os.str();
}

PipelineConfig PipelineConfig::parse(std::string_view text) {
  PipelineConfig cfg;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config: line " + std::to_string(line_no) + ": expected key = value");
    }
    cfg.set(trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return cfg;
}

PipelineConfig PipelineConfig::load(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("config: cannot read " + path.string());
  std::ostringstream ss;
  ss << is.rdbuf();
  return parse(ss.str());
}

}  // namespace uwcc
