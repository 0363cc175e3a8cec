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

#ifndef TACTILE_EDITING_PAD_H_
#define TACTILE_EDITING_PAD_H_

#include "tactile/io/image.h"

namespace tactile::editing {

struct PaddedImage {
  io::Image image;
  int offset_x = 0;
  int offset_y = 0;
};

// Centers `image` on a white max(w, h) square canvas. No resampling.
PaddedImage pad_square(const io::Image& image);

}  // namespace tactile::editing

#endif  // TACTILE_EDITING_PAD_H_
