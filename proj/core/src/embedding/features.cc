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

#include "tactile/embedding/features.h"

#include "tactile/io/files.h"

namespace tactile::embedding {

PairEmbeddings FeatureBuilder::pair(std::string_view pair_id) {
  if (auto it = pair_memo_.find(pair_id); it != pair_memo_.end()) {
    return it->second;
  }
  const corpus::ImagePair& p = pairs_.at(pair_id);
  auto natural = io::read_bytes(p.natural_ref);
  auto tactile = io::read_bytes(p.tactile_ref);
  PairEmbeddings pe{cache_.image(natural), cache_.image(tactile)};
  pair_memo_.emplace(std::string(pair_id), pe);
  return pe;
}

Embedding FeatureBuilder::option_text(corpus::TaskCode task,
                                      std::string_view option_id) {
  return cache_.text(option_prompt(task, registry_.option(task, option_id)));
}

FeatureVector FeatureBuilder::features(std::string_view pair_id,
                                       corpus::TaskCode task,
                                       std::string_view option_id) {
  PairEmbeddings pe = pair(pair_id);
  return assemble_features(pe.natural, pe.tactile, option_text(task, option_id));
}

FeatureVector FeatureBuilder::features_with_tactile(
    std::string_view pair_id, std::span<const std::byte> tactile_png,
    corpus::TaskCode task, std::string_view option_id) {
  const corpus::ImagePair& p = pairs_.at(pair_id);
  Embedding natural = cache_.image(io::read_bytes(p.natural_ref));
  Embedding tactile = cache_.image(tactile_png);
  return assemble_features(natural, tactile, option_text(task, option_id));
}

std::vector<FeatureVector> FeatureBuilder::features(
    std::span<const corpus::BinaryRecord> records) {
  std::vector<FeatureVector> out;
  out.reserve(records.size());
  for (const corpus::BinaryRecord& r : records) {
    out.push_back(features(r.pair_id, r.task, r.option_id));
  }
  return out;
}

}  // namespace tactile::embedding
