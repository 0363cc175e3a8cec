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

#ifndef TACTILE_HASHING_H_
#define TACTILE_HASHING_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace tactile {

// SHA-256 digest. Used for content addressing and whole-file checksums.
using Digest = std::array<std::uint8_t, 32>;

Digest sha256(std::span<const std::byte> data);
Digest sha256(std::string_view text);

std::string to_hex(const Digest& digest);
// Throws Error(kMalformed) unless `hex` is 64 hex characters.
Digest digest_from_hex(std::string_view hex);

// Maps the first eight digest bytes (big-endian) into [0, 1).
double unit_interval(const Digest& digest);

}  // namespace tactile

#endif  // TACTILE_HASHING_H_
