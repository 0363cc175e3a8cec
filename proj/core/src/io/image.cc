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

#include "tactile/io/image.h"

#include <png.h>

#include <cstring>
#include <memory>

#include "tactile/error.h"

namespace tactile::io {

Image::Image(int w, int h, std::uint8_t fill)
    : width(w), height(h), rgba(std::size_t(w) * h * 4, fill) {}

namespace {

struct PngImageGuard {
  png_image* img;
  ~PngImageGuard() { png_image_free(img); }
};

}  // namespace

Image decode_png(std::span<const std::byte> bytes) {
  png_image img;
  std::memset(&img, 0, sizeof(img));
  img.version = PNG_IMAGE_VERSION;
  PngImageGuard guard{&img};
  if (bytes.empty() ||
      !png_image_begin_read_from_memory(&img, bytes.data(), bytes.size())) {
    throw Error(ErrorCode::kUndecodableImage,
                std::string("cannot decode PNG: ") +
                    (bytes.empty() ? "empty input" : img.message));
  }
  img.format = PNG_FORMAT_RGBA;
  if (img.width == 0 || img.height == 0 || img.width > 1 << 15 ||
      img.height > 1 << 15) {
    throw Error(ErrorCode::kUndecodableImage, "PNG has unsupported size");
  }
  Image out(static_cast<int>(img.width), static_cast<int>(img.height), 0);
  if (!png_image_finish_read(&img, nullptr, out.rgba.data(), 0, nullptr)) {
    throw Error(ErrorCode::kUndecodableImage,
                std::string("cannot decode PNG: ") + img.message);
  }
  return out;
}

std::vector<std::byte> encode_png(const Image& image) {
  png_image img;
  std::memset(&img, 0, sizeof(img));
  img.version = PNG_IMAGE_VERSION;
  img.width = static_cast<png_uint_32>(image.width);
  img.height = static_cast<png_uint_32>(image.height);
  img.format = PNG_FORMAT_RGBA;
  PngImageGuard guard{&img};
  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&img, nullptr, &size, 0, image.rgba.data(), 0,
                                 nullptr)) {
    throw Error(ErrorCode::kIo, std::string("PNG encode failed: ") + img.message);
  }
  std::vector<std::byte> out(size);
  if (!png_image_write_to_memory(&img, out.data(), &size, 0, image.rgba.data(),
                                 0, nullptr)) {
    throw Error(ErrorCode::kIo, std::string("PNG encode failed: ") + img.message);
  }
  out.resize(size);
  return out;
}

}  // namespace tactile::io
