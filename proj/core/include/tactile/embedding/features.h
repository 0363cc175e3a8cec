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

#ifndef TACTILE_EMBEDDING_FEATURES_H_
#define TACTILE_EMBEDDING_FEATURES_H_

#include <cstddef>
#include <map>
#include <string>
#include <span>
#include <string_view>
#include <vector>

#include "tactile/corpus/pairs.h"
#include "tactile/corpus/records.h"
#include "tactile/corpus/taxonomy.h"
#include "tactile/embedding/cache.h"
#include "tactile/embedding/embedding.h"

namespace tactile::embedding {

struct PairEmbeddings {
  Embedding natural;
  Embedding tactile;
};

// Builds probe inputs for (pair, task, option) from image files and option
// prompts, memoized through the cache. Not thread-safe.
class FeatureBuilder {
 public:
  FeatureBuilder(const corpus::Registry& registry,
                 const corpus::PairIndex& pairs, EmbeddingCache& cache)
      : registry_(registry), pairs_(pairs), cache_(cache) {}

  PairEmbeddings pair(std::string_view pair_id);
  Embedding option_text(corpus::TaskCode task, std::string_view option_id);

  FeatureVector features(std::string_view pair_id, corpus::TaskCode task,
                         std::string_view option_id);
  // Same, but with the tactile image replaced by `tactile_png`.
  FeatureVector features_with_tactile(std::string_view pair_id,
                                      std::span<const std::byte> tactile_png,
                                      corpus::TaskCode task,
                                      std::string_view option_id);

  std::vector<FeatureVector> features(
      std::span<const corpus::BinaryRecord> records);

 private:
  const corpus::Registry& registry_;
  const corpus::PairIndex& pairs_;
  EmbeddingCache& cache_;
  std::map<std::string, PairEmbeddings, std::less<>> pair_memo_;
};

}  // namespace tactile::embedding

#endif  // TACTILE_EMBEDDING_FEATURES_H_
