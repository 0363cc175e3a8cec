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

#include "tactile/embedding/cache.h"

#include "tactile/error.h"

namespace tactile::embedding {

EmbeddingCache::EmbeddingCache(EmbeddingProvider& provider,
                               EmbeddingStore store)
    : provider_(provider), store_(std::move(store)) {
  if (store_.provider_id() != provider_.id()) {
    throw Error(ErrorCode::kInvariant,
                "embedding store belongs to provider '" +
                    store_.provider_id() + "', not '" + provider_.id() + "'");
  }
}

Embedding EmbeddingCache::get_or_compute(
    const Digest& hash, const std::function<Embedding()>& compute) {
  std::promise<Embedding> promise;
  std::shared_future<Embedding> pending;
  {
    std::lock_guard lock(mu_);
    if (auto hit = store_.find(hash)) return *hit;
    auto it = inflight_.find(hash);
    if (it != inflight_.end()) {
      pending = it->second;
    } else {
      inflight_.emplace(hash, promise.get_future().share());
    }
  }
  if (pending.valid()) return pending.get();

  try {
    ++provider_calls_;
    Embedding e = compute();
    if (e.source_hash != hash) {
      throw Error(ErrorCode::kInvariant,
                  "provider returned an embedding for different content");
    }
    check_unit(e);
    {
      std::lock_guard lock(mu_);
      store_.insert(e);
      inflight_.erase(hash);
    }
    promise.set_value(e);
    return e;
  } catch (...) {
    {
      std::lock_guard lock(mu_);
      inflight_.erase(hash);
    }
    promise.set_exception(std::current_exception());
    throw;
  }
}

Embedding EmbeddingCache::image(std::span<const std::byte> image_bytes) {
  return get_or_compute(sha256(image_bytes),
                        [&] { return provider_.embed_image(image_bytes); });
}

Embedding EmbeddingCache::text(std::string_view text) {
  return get_or_compute(sha256(text),
                        [&] { return provider_.embed_text(text); });
}

EmbeddingStore EmbeddingCache::snapshot() const {
  std::lock_guard lock(mu_);
  return store_;
}

void EmbeddingCache::save(const std::filesystem::path& path) const {
  snapshot().save(path);
}

}  // namespace tactile::embedding
