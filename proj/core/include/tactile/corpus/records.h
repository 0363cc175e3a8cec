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

#ifndef TACTILE_CORPUS_RECORDS_H_
#define TACTILE_CORPUS_RECORDS_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tactile/corpus/taxonomy.h"

namespace tactile::corpus {

enum class Split : std::uint8_t { kTrain, kVal, kTest };

std::string_view split_name(Split s);
Split parse_split(std::string_view name);

using Provenance = std::map<std::string, std::string>;

// One consensus-backed option-level judgment.
struct BinaryRecord {
  std::string pair_id;
  TaskCode task;
  std::string option_id;
  std::string option_desc;
  bool label = false;
  double vote_fraction = 0.0;
  int votes_for = 0;
  int votes_total = 1;
  Split split = Split::kTrain;
  Provenance provenance;

  friend bool operator==(const BinaryRecord&, const BinaryRecord&) = default;
};

struct SplitCounts {
  std::size_t train = 0;
  std::size_t val = 0;
  std::size_t test = 0;

  std::size_t total() const { return train + val + test; }
  void add(Split s);
  friend bool operator==(const SplitCounts&, const SplitCounts&) = default;
};

SplitCounts count_splits(std::span<const BinaryRecord> records);

struct RecordSet {
  std::vector<BinaryRecord> records;
  SplitCounts counts;
};

inline constexpr std::string_view kRecordsFormat = "tactile-binary-records";
inline constexpr int kRecordsVersion = 1;

// Checks one record against the registry and its vote arithmetic.
void validate_record(const BinaryRecord& record, const Registry& registry);

// Whole-set checks: unique (pair, task, option) keys and a consistent split
// for every (pair, task).
void validate_record_set(std::span<const BinaryRecord> records);

// JSON-lines document: a header line, then one record per line.
RecordSet parse_records(std::string_view text, const Registry& registry);
RecordSet load_records(const std::filesystem::path& path,
                       const Registry& registry);

std::string serialize_records(std::span<const BinaryRecord> records);
void write_records(std::span<const BinaryRecord> records,
                   const std::filesystem::path& path);

}  // namespace tactile::corpus

#endif  // TACTILE_CORPUS_RECORDS_H_
