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

#include "tactile/corpus/pairs.h"

#include "tactile/error.h"
#include "tactile/io/files.h"
#include "tactile/io/text.h"

namespace tactile::corpus {

namespace fs = std::filesystem;

void PairIndex::add(ImagePair pair) {
  if (pair.pair_id.empty()) {
    throw Error(ErrorCode::kMalformed, "pair with empty id");
  }
  if (pair.object_class.empty()) {
    throw Error(ErrorCode::kMalformed,
                "pair " + pair.pair_id + " has an empty object class");
  }
  std::string id = pair.pair_id;
  if (!pairs_.emplace(id, std::move(pair)).second) {
    throw Error(ErrorCode::kDuplicate, "duplicate pair id " + id);
  }
}

const ImagePair* PairIndex::find(std::string_view pair_id) const {
  auto it = pairs_.find(pair_id);
  return it == pairs_.end() ? nullptr : &it->second;
}

const ImagePair& PairIndex::at(std::string_view pair_id) const {
  const ImagePair* p = find(pair_id);
  if (p == nullptr) {
    throw Error(ErrorCode::kUnknownReference,
                "unknown pair id " + std::string(pair_id));
  }
  return *p;
}

PairIndex parse_pairs(std::string_view csv_text, const fs::path& base_dir) {
  auto lines = io::split_lines(csv_text);
  if (lines.empty()) throw Error(ErrorCode::kMalformed, "empty pair manifest");
  const std::vector<std::string> expected = {"pair_id", "natural", "tactile",
                                             "object_class", "family"};
  if (io::split_row(lines[0]) != expected) {
    throw Error(ErrorCode::kMalformed,
                "pair manifest header must be "
                "pair_id,natural,tactile,object_class,family");
  }
  PairIndex index;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (io::trim(lines[i]).empty()) continue;
    auto f = io::split_row(lines[i]);
    if (f.size() != expected.size()) {
      throw Error(ErrorCode::kMalformed,
                  "pair manifest line " + std::to_string(i + 1) +
                      ": expected 5 fields");
    }
    auto resolve = [&](const std::string& p) {
      fs::path path(p);
      return path.is_absolute() ? path : base_dir / path;
    };
    index.add(ImagePair{f[0], resolve(f[1]), resolve(f[2]), f[3],
                        parse_family(f[4])});
  }
  return index;
}

PairIndex load_pairs(const fs::path& path) {
  return parse_pairs(io::read_text(path), path.parent_path());
}

std::string serialize_pairs(const PairIndex& pairs, const fs::path& base_dir) {
  std::string out = "pair_id,natural,tactile,object_class,family\n";
  for (const auto& [id, p] : pairs.all()) {
    auto rel = [&](const fs::path& path) {
      return path.lexically_relative(base_dir).generic_string();
    };
    out += id + "," + rel(p.natural_ref) + "," + rel(p.tactile_ref) + "," +
           p.object_class + "," + std::string(family_code(p.family)) + "\n";
  }
  return out;
}

}  // namespace tactile::corpus
