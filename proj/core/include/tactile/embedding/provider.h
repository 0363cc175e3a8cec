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

#ifndef TACTILE_EMBEDDING_PROVIDER_H_
#define TACTILE_EMBEDDING_PROVIDER_H_

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "tactile/embedding/embedding.h"
#include "tactile/embedding/store.h"

namespace tactile::embedding {

// Deterministic per input content; returns normalized embeddings.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;

  virtual std::string id() const = 0;
  virtual Embedding embed_image(std::span<const std::byte> image_bytes) = 0;
  virtual Embedding embed_text(std::string_view text) = 0;
};

// Unit vector drawn from mt19937_64 seeded by (hash, modality). Reproducible
// across platforms: only raw engine output is used.
Embedding fixture_embedding(const Digest& hash, Modality modality);

// Hash-seeded pseudo-random embeddings; no neural runtime needed. Images must
// still decode as PNG.
class FixtureProvider final : public EmbeddingProvider {
 public:
  static constexpr std::string_view kId = "fixture-sha256-v1";

  std::string id() const override { return std::string(kId); }
  Embedding embed_image(std::span<const std::byte> image_bytes) override;
  Embedding embed_text(std::string_view text) override;
};

// Serves vectors precomputed by an external encoder into a store file.
// Content that is not in the store raises Error(kProviderUnavailable).
class StoreProvider final : public EmbeddingProvider {
 public:
  explicit StoreProvider(EmbeddingStore store) : store_(std::move(store)) {}

  std::string id() const override { return store_.provider_id(); }
  Embedding embed_image(std::span<const std::byte> image_bytes) override;
  Embedding embed_text(std::string_view text) override;

 private:
  Embedding lookup(const Digest& hash, Modality modality) const;

  EmbeddingStore store_;
};

}  // namespace tactile::embedding

#endif  // TACTILE_EMBEDDING_PROVIDER_H_
