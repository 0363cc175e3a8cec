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

#include "tactile/embedding/store.h"

#include <cstring>

#include "tactile/error.h"
#include "tactile/io/binary.h"
#include "tactile/io/files.h"

namespace tactile::embedding {

namespace {
constexpr std::string_view kMagic = "TEMB";
}

std::optional<Embedding> EmbeddingStore::find(const Digest& hash) const {
  auto it = entries_.find(hash);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void EmbeddingStore::insert(const Embedding& e) {
  auto [it, inserted] = entries_.emplace(e.source_hash, e);
  if (!inserted && !(it->second == e)) {
    throw Error(ErrorCode::kInvariant,
                "store already holds a different vector for " +
                    to_hex(e.source_hash));
  }
}

std::vector<std::byte> EmbeddingStore::serialize() const {
  io::BinaryWriter w;
  w.put_magic(kMagic);
  w.put_u32(kStoreVersion);
  w.put_string(provider_id_);
  w.put_u32(static_cast<std::uint32_t>(kEmbeddingDim));
  for (const auto& [hash, e] : entries_) {
    w.put_bytes(std::as_bytes(std::span(hash)));
    w.put_u8(static_cast<std::uint8_t>(e.modality));
    w.put_f32_block(e.values);
  }
  w.seal_with_checksum();
  return w.bytes();
}

EmbeddingStore EmbeddingStore::parse(std::span<const std::byte> bytes) {
  io::BinaryReader r = io::BinaryReader::checked(bytes);
  r.expect_magic(kMagic);
  std::uint32_t version = r.get_u32();
  if (version != kStoreVersion) {
    throw Error(ErrorCode::kVersionMismatch,
                "embedding store version " + std::to_string(version));
  }
  EmbeddingStore store(r.get_string());
  std::uint32_t dim = r.get_u32();
  if (dim != kEmbeddingDim) {
    throw Error(ErrorCode::kDimensionMismatch,
                "embedding store dim " + std::to_string(dim) + ", expected 768");
  }
  constexpr std::size_t kRecordSize = 32 + 1 + 4 * kEmbeddingDim;
  if (r.remaining() % kRecordSize != 0) {
    throw Error(ErrorCode::kCorrupt, "embedding store has a partial record");
  }
  while (!r.at_end()) {
    Embedding e;
    auto h = r.get_bytes(32);
    std::memcpy(e.source_hash.data(), h.data(), 32);
    std::uint8_t m = r.get_u8();
    if (m > 1) throw Error(ErrorCode::kCorrupt, "bad modality byte");
    e.modality = static_cast<Modality>(m);
    r.get_f32_block(e.values);
    if (!store.entries_.emplace(e.source_hash, e).second) {
      throw Error(ErrorCode::kCorrupt, "duplicate hash in embedding store");
    }
  }
  return store;
}

void EmbeddingStore::save(const std::filesystem::path& path) const {
  io::write_bytes_atomic(path, serialize());
}

EmbeddingStore EmbeddingStore::load(const std::filesystem::path& path) {
  return parse(io::read_bytes(path));
}

EmbeddingStore EmbeddingStore::open(const std::filesystem::path& path,
                                    const std::string& provider_id) {
  if (!std::filesystem::exists(path)) return EmbeddingStore(provider_id);
  EmbeddingStore store = load(path);
  if (store.provider_id() != provider_id) {
    throw Error(ErrorCode::kInvariant,
                "store " + path.string() + " was written by provider '" +
                    store.provider_id() + "', not '" + provider_id + "'");
  }
  return store;
}

}  // namespace tactile::embedding
