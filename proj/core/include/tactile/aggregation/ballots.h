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

#ifndef TACTILE_AGGREGATION_BALLOTS_H_
#define TACTILE_AGGREGATION_BALLOTS_H_

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tactile/corpus/taxonomy.h"

namespace tactile::aggregation {

enum class BallotStatus : std::uint8_t { kApproved, kRejected, kUnknown };

std::string_view status_name(BallotStatus s);
// Accepts approved/rejected (any case); anything else maps to kUnknown.
BallotStatus parse_status(std::string_view s);

using OptionSet = std::set<std::string, std::less<>>;

struct GoldAnswer {
  std::string gold_pair_id;
  OptionSet selected;
};

// One worker assignment for one (pair, task) HIT.
struct Ballot {
  std::string worker_id;
  std::string assignment_id;
  std::string pair_id;
  corpus::TaskCode task;
  OptionSet selected;
  std::vector<GoldAnswer> gold_answers;
  BallotStatus status = BallotStatus::kUnknown;
};

struct GoldEntry {
  corpus::TaskCode task;
  OptionSet correct;
};

using GoldKey = std::map<std::string, GoldEntry, std::less<>>;

// Ballot export rows: worker_id, assignment_id, pair_id, task, selected,
// status, then repeating gold_pair_id_N, gold_selected_N columns.
// Option lists are semicolon-joined.
std::vector<Ballot> parse_ballots(std::string_view csv_text);
std::vector<Ballot> load_ballots(const std::filesystem::path& path);
std::string serialize_ballots(const std::vector<Ballot>& ballots);

// Gold key rows: gold_pair_id, task, correct_options.
GoldKey parse_gold_key(std::string_view csv_text);
GoldKey load_gold_key(const std::filesystem::path& path);
std::string serialize_gold_key(const GoldKey& key);

// Throws Error(kUnknownReference) if a ballot references an unknown task or
// selects an option outside its task.
void validate_ballots(const std::vector<Ballot>& ballots,
                      const corpus::Registry& registry);

}  // namespace tactile::aggregation

#endif  // TACTILE_AGGREGATION_BALLOTS_H_
