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

#ifndef TACTILE_EMBEDDING_CACHE_H_
#define TACTILE_EMBEDDING_CACHE_H_

#include <atomic>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <span>
#include <string_view>

#include "tactile/embedding/provider.h"
#include "tactile/embedding/store.h"

namespace tactile::embedding {

// Memoizes provider calls by content hash on top of an EmbeddingStore.
// Concurrent requests for one hash share a single computation.
class EmbeddingCache {
 public:
  // Throws Error(kInvariant) if the store belongs to another provider.
  EmbeddingCache(EmbeddingProvider& provider, EmbeddingStore store);

  Embedding image(std::span<const std::byte> image_bytes);
  Embedding text(std::string_view text);

  Embedding get_or_compute(const Digest& hash,
                           const std::function<Embedding()>& compute);

  std::size_t provider_calls() const { return provider_calls_.load(); }

  // Snapshot of every cached embedding.
  EmbeddingStore snapshot() const;
  void save(const std::filesystem::path& path) const;

 private:
  EmbeddingProvider& provider_;
  mutable std::mutex mu_;
  EmbeddingStore store_;
  std::map<Digest, std::shared_future<Embedding>> inflight_;
  std::atomic<std::size_t> provider_calls_{0};
};

}  // namespace tactile::embedding

#endif  // TACTILE_EMBEDDING_CACHE_H_
