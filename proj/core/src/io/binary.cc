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

#include "tactile/io/binary.h"

#include <bit>
#include <cstring>

#include "tactile/error.h"

namespace tactile::io {

static_assert(std::endian::native == std::endian::little,
              "binary formats assume a little-endian host");

void BinaryWriter::put_bytes(std::span<const std::byte> bytes) {
  buffer_.insert(buffer_.end(), bytes.begin(), bytes.end());
}

void BinaryWriter::put_magic(std::string_view magic) {
  put_bytes(std::as_bytes(std::span(magic.data(), magic.size())));
}

void BinaryWriter::put_u8(std::uint8_t v) {
  buffer_.push_back(static_cast<std::byte>(v));
}

void BinaryWriter::put_u32(std::uint32_t v) {
  put_bytes(std::as_bytes(std::span(&v, 1)));
}

void BinaryWriter::put_u64(std::uint64_t v) {
  put_bytes(std::as_bytes(std::span(&v, 1)));
}

void BinaryWriter::put_f32(float v) {
  put_bytes(std::as_bytes(std::span(&v, 1)));
}

void BinaryWriter::put_f64(double v) {
  put_bytes(std::as_bytes(std::span(&v, 1)));
}

void BinaryWriter::put_string(std::string_view s) {
  put_u32(static_cast<std::uint32_t>(s.size()));
  put_magic(s);
}

void BinaryWriter::put_f32_block(std::span<const float> values) {
  put_bytes(std::as_bytes(values));
}

void BinaryWriter::put_f64_block(std::span<const double> values) {
  put_bytes(std::as_bytes(values));
}

void BinaryWriter::seal_with_checksum() {
  Digest d = sha256(std::span<const std::byte>(buffer_));
  put_bytes(std::as_bytes(std::span(d)));
}

BinaryReader BinaryReader::checked(std::span<const std::byte> data) {
  if (data.size() < 32) throw Error(ErrorCode::kCorrupt, "file truncated");
  auto body = data.first(data.size() - 32);
  Digest expected = sha256(body);
  if (std::memcmp(expected.data(), data.data() + body.size(), 32) != 0) {
    throw Error(ErrorCode::kCorrupt, "checksum mismatch");
  }
  return BinaryReader(body);
}

void BinaryReader::expect_magic(std::string_view magic) {
  auto got = get_bytes(magic.size());
  if (std::memcmp(got.data(), magic.data(), magic.size()) != 0) {
    throw Error(ErrorCode::kCorrupt,
                "bad magic, expected " + std::string(magic));
  }
}

std::span<const std::byte> BinaryReader::get_bytes(std::size_t n) {
  if (n > remaining()) throw Error(ErrorCode::kCorrupt, "unexpected end of data");
  auto out = data_.subspan(offset_, n);
  offset_ += n;
  return out;
}

namespace {
template <typename T>
T load(std::span<const std::byte> bytes) {
  T v;
  std::memcpy(&v, bytes.data(), sizeof(T));
  return v;
}
}  // namespace

std::uint8_t BinaryReader::get_u8() { return load<std::uint8_t>(get_bytes(1)); }
std::uint32_t BinaryReader::get_u32() { return load<std::uint32_t>(get_bytes(4)); }
std::uint64_t BinaryReader::get_u64() { return load<std::uint64_t>(get_bytes(8)); }
float BinaryReader::get_f32() { return load<float>(get_bytes(4)); }
double BinaryReader::get_f64() { return load<double>(get_bytes(8)); }

std::string BinaryReader::get_string() {
  std::uint32_t n = get_u32();
  auto bytes = get_bytes(n);
  return std::string(reinterpret_cast<const char*>(bytes.data()), n);
}

void BinaryReader::get_f32_block(std::span<float> out) {
  auto bytes = get_bytes(out.size_bytes());
  std::memcpy(out.data(), bytes.data(), bytes.size());
}

void BinaryReader::get_f64_block(std::span<double> out) {
  auto bytes = get_bytes(out.size_bytes());
  std::memcpy(out.data(), bytes.data(), bytes.size());
}

}  // namespace tactile::io
