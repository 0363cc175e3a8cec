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

#ifndef TACTILE_EMBEDDING_STORE_H_
#define TACTILE_EMBEDDING_STORE_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tactile/embedding/embedding.h"

namespace tactile::embedding {

inline constexpr std::uint32_t kStoreVersion = 1;

// Content-addressed embedding file.
//
//   "TEMB" | u32 version | u32 len, provider id bytes | u32 dim (768)
//   repeated: 32-byte SHA-256 | u8 modality | 768 x f32
//   SHA-256 of all preceding bytes
//
// All integers and floats little-endian. Entries are written in ascending
// hash order.
class EmbeddingStore {
 public:
  explicit EmbeddingStore(std::string provider_id)
      : provider_id_(std::move(provider_id)) {}

  const std::string& provider_id() const { return provider_id_; }
  std::size_t size() const { return entries_.size(); }

  std::optional<Embedding> find(const Digest& hash) const;
  bool contains(const Digest& hash) const { return entries_.contains(hash); }
  // Throws Error(kInvariant) if a different vector is already stored.
  void insert(const Embedding& e);

  const std::map<Digest, Embedding>& entries() const { return entries_; }

  std::vector<std::byte> serialize() const;
  // Throws Error(kCorrupt) on checksum or layout errors and
  // Error(kVersionMismatch) on an unknown version.
  static EmbeddingStore parse(std::span<const std::byte> bytes);

  void save(const std::filesystem::path& path) const;
  static EmbeddingStore load(const std::filesystem::path& path);
  // Loads `path` if it exists, otherwise returns an empty store. Throws
  // Error(kInvariant) if the file was written by a different provider.
  static EmbeddingStore open(const std::filesystem::path& path,
                             const std::string& provider_id);

 private:
  std::string provider_id_;
  std::map<Digest, Embedding> entries_;
};

}  // namespace tactile::embedding

#endif  // TACTILE_EMBEDDING_STORE_H_
