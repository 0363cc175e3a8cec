// Copyright 2026 The tactile-qa Authors.
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

#ifndef TACTILE_IO_IMAGE_H_
#define TACTILE_IO_IMAGE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tactile::io {

// 8-bit RGBA raster, row-major, no padding.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgba;

  Image() = default;
  Image(int w, int h, std::uint8_t fill = 255);

  std::uint8_t* pixel(int x, int y) { return &rgba[4 * (std::size_t(y) * width + x)]; }
  const std::uint8_t* pixel(int x, int y) const {
    return &rgba[4 * (std::size_t(y) * width + x)];
  }

  friend bool operator==(const Image&, const Image&) = default;
};

// Throws Error(kUndecodableImage).
Image decode_png(std::span<const std::byte> bytes);
std::vector<std::byte> encode_png(const Image& image);

}  // namespace tactile::io

#endif  // TACTILE_IO_IMAGE_H_
