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

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>

#include "uwcc/raster.hpp"

namespace uwcc {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// True for .png, .jpg and .jpeg (case-insensitive).
bool is_supported_image(const std::filesystem::path& path);

/// Decodes a PNG or JPEG (sniffed from the file signature) into 8-bit RGB.
/// Grayscale and palette images are expanded; images with an alpha channel
/// are rejected.
RasterRGB read_image(const std::filesystem::path& path);

/// Encodes by extension: .jpg/.jpeg as baseline JPEG, anything else as PNG.
void write_image(const std::filesystem::path& path, const RasterRGB& img, int jpeg_quality = 95);

/// 16-bit single-channel PNG, row-major samples.
void write_png_gray16(const std::filesystem::path& path, int width, int height,
                      std::span<const std::uint16_t> samples);

/// Reads back a file written by write_png_gray16.
std::vector<std::uint16_t> read_png_gray16(const std::filesystem::path& path, int& width,
                                           int& height);

}  // namespace uwcc
