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

#include "tactile/editing/pad.h"

#include <algorithm>
#include <cstring>

#include "tactile/error.h"

namespace tactile::editing {

PaddedImage pad_square(const io::Image& image) {
  if (image.width <= 0 || image.height <= 0 ||
      image.rgba.size() != std::size_t(image.width) * image.height * 4) {
    throw Error(ErrorCode::kUndecodableImage, "pad_square: invalid image");
  }
  const int side = std::max(image.width, image.height);
  PaddedImage out{io::Image(side, side, 255), (side - image.width) / 2,
                  (side - image.height) / 2};
  for (int y = 0; y < image.height; ++y) {
    std::memcpy(out.image.pixel(out.offset_x, out.offset_y + y),
                image.pixel(0, y), std::size_t(image.width) * 4);
  }
  return out;
}

}  // namespace tactile::editing
