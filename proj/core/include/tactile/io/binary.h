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

#ifndef TACTILE_IO_BINARY_H_
#define TACTILE_IO_BINARY_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tactile/hashing.h"

namespace tactile::io {

// Little-endian encoder for the binary store and checkpoint formats.
class BinaryWriter {
 public:
  void put_bytes(std::span<const std::byte> bytes);
  void put_magic(std::string_view magic);
  void put_u8(std::uint8_t v);
  void put_u32(std::uint32_t v);
  void put_u64(std::uint64_t v);
  void put_f32(float v);
  void put_f64(double v);
  // u32 length prefix followed by raw UTF-8 bytes.
  void put_string(std::string_view s);
  void put_f32_block(std::span<const float> values);
  void put_f64_block(std::span<const double> values);

  // Appends SHA-256 over everything written so far.
  void seal_with_checksum();

  const std::vector<std::byte>& bytes() const { return buffer_; }

 private:
  std::vector<std::byte> buffer_;
};

// Bounds-checked decoder; any overrun throws Error(kCorrupt).
class BinaryReader {
 public:
  explicit BinaryReader(std::span<const std::byte> data) : data_(data) {}

  // Verifies and strips the trailing SHA-256. Throws Error(kCorrupt).
  static BinaryReader checked(std::span<const std::byte> data);

  void expect_magic(std::string_view magic);
  std::span<const std::byte> get_bytes(std::size_t n);
  std::uint8_t get_u8();
  std::uint32_t get_u32();
  std::uint64_t get_u64();
  float get_f32();
  double get_f64();
  std::string get_string();
  void get_f32_block(std::span<float> out);
  void get_f64_block(std::span<double> out);

  std::size_t remaining() const { return data_.size() - offset_; }
  bool at_end() const { return remaining() == 0; }

 private:
  std::span<const std::byte> data_;
  std::size_t offset_ = 0;
};

}  // namespace tactile::io

#endif  // TACTILE_IO_BINARY_H_
