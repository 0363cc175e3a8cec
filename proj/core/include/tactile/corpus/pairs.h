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

#ifndef TACTILE_CORPUS_PAIRS_H_
#define TACTILE_CORPUS_PAIRS_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "tactile/corpus/taxonomy.h"

namespace tactile::corpus {

struct ImagePair {
  std::string pair_id;
  std::filesystem::path natural_ref;
  std::filesystem::path tactile_ref;
  std::string object_class;
  Family family = Family::kF1;
};

// Pair manifest: CSV with header `pair_id,natural,tactile,object_class,family`.
// Relative image paths resolve against `base_dir`.
class PairIndex {
 public:
  PairIndex() = default;

  void add(ImagePair pair);
  const ImagePair& at(std::string_view pair_id) const;
  const ImagePair* find(std::string_view pair_id) const;
  std::size_t size() const { return pairs_.size(); }
  const std::map<std::string, ImagePair, std::less<>>& all() const {
    return pairs_;
  }

 private:
  std::map<std::string, ImagePair, std::less<>> pairs_;
};

PairIndex parse_pairs(std::string_view csv_text,
                      const std::filesystem::path& base_dir);
PairIndex load_pairs(const std::filesystem::path& path);
std::string serialize_pairs(const PairIndex& pairs,
                            const std::filesystem::path& base_dir);

}  // namespace tactile::corpus

#endif  // TACTILE_CORPUS_PAIRS_H_
