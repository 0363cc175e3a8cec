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

#ifndef TACTILE_IO_FILES_H_
#define TACTILE_IO_FILES_H_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tactile::io {

std::vector<std::byte> read_bytes(const std::filesystem::path& path);
std::string read_text(const std::filesystem::path& path);

// Writes to a sibling temporary file and renames it into place.
void write_bytes_atomic(const std::filesystem::path& path,
                        std::span<const std::byte> data);
void write_text_atomic(const std::filesystem::path& path,
                       std::string_view text);

std::span<const std::byte> as_bytes(std::string_view text);

}  // namespace tactile::io

#endif  // TACTILE_IO_FILES_H_
