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

#include "tactile/embedding/provider.h"

#include <random>

#include "tactile/error.h"
#include "tactile/io/files.h"
#include "tactile/io/image.h"

namespace tactile::embedding {

Embedding fixture_embedding(const Digest& hash, Modality modality) {
  std::vector<std::uint32_t> seed_words;
  for (std::size_t i = 0; i < hash.size(); i += 4) {
    seed_words.push_back(std::uint32_t(hash[i]) << 24 |
                         std::uint32_t(hash[i + 1]) << 16 |
                         std::uint32_t(hash[i + 2]) << 8 | hash[i + 3]);
  }
  seed_words.push_back(static_cast<std::uint32_t>(modality));
  std::seed_seq seq(seed_words.begin(), seed_words.end());
  std::mt19937_64 rng(seq);
  std::vector<double> raw(kEmbeddingDim);
  for (double& x : raw) {
    // Uniform in [-1, 1) from the top 53 bits.
    x = static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
  }
  return make_embedding(raw, modality, hash);
}

Embedding FixtureProvider::embed_image(std::span<const std::byte> image_bytes) {
  io::decode_png(image_bytes);
  return fixture_embedding(sha256(image_bytes), Modality::kImage);
}

Embedding FixtureProvider::embed_text(std::string_view text) {
  if (text.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "cannot embed empty text");
  }
  return fixture_embedding(sha256(text), Modality::kText);
}

Embedding StoreProvider::lookup(const Digest& hash, Modality modality) const {
  auto e = store_.find(hash);
  if (!e) {
    throw Error(ErrorCode::kProviderUnavailable,
                "no precomputed " + std::string(modality_name(modality)) +
                    " embedding for " + to_hex(hash));
  }
  if (e->modality != modality) {
    throw Error(ErrorCode::kCorrupt, "stored embedding has the wrong modality");
  }
  return *e;
}

Embedding StoreProvider::embed_image(std::span<const std::byte> image_bytes) {
  return lookup(sha256(image_bytes), Modality::kImage);
}

Embedding StoreProvider::embed_text(std::string_view text) {
  if (text.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "cannot embed empty text");
  }
  return lookup(sha256(text), Modality::kText);
}

}  // namespace tactile::embedding
