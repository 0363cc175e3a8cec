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

#include "tactile/aggregation/ballots.h"

#include <algorithm>
#include <cctype>

#include "tactile/error.h"
#include "tactile/io/files.h"
#include "tactile/io/text.h"

namespace tactile::aggregation {

namespace {

constexpr std::size_t kFixedColumns = 6;

OptionSet to_set(std::string_view joined) {
  auto items = io::split_list(joined, ';');
  return OptionSet(items.begin(), items.end());
}

std::string join_set(const OptionSet& s) {
  return io::join(std::vector<std::string>(s.begin(), s.end()), ";");
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

std::string_view status_name(BallotStatus s) {
  switch (s) {
    case BallotStatus::kApproved: return "approved";
    case BallotStatus::kRejected: return "rejected";
    case BallotStatus::kUnknown: return "unknown";
  }
  return "unknown";
}

BallotStatus parse_status(std::string_view s) {
  std::string l = lower(io::trim(s));
  if (l == "approved") return BallotStatus::kApproved;
  if (l == "rejected") return BallotStatus::kRejected;
  return BallotStatus::kUnknown;
}

std::vector<Ballot> parse_ballots(std::string_view csv_text) {
  auto lines = io::split_lines(csv_text);
  if (lines.empty()) throw Error(ErrorCode::kMalformed, "empty ballot export");
  auto header = io::split_row(lines[0]);
  const std::vector<std::string> fixed = {"worker_id", "assignment_id",
                                          "pair_id",   "task",
                                          "selected",  "status"};
  if (header.size() < kFixedColumns ||
      !std::equal(fixed.begin(), fixed.end(), header.begin())) {
    throw Error(ErrorCode::kMalformed,
                "ballot header must start with "
                "worker_id,assignment_id,pair_id,task,selected,status");
  }
  if ((header.size() - kFixedColumns) % 2 != 0) {
    throw Error(ErrorCode::kMalformed,
                "gold columns must come in (gold_pair_id_N, gold_selected_N) "
                "pairs");
  }

  std::vector<Ballot> ballots;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (io::trim(lines[i]).empty()) continue;
    auto f = io::split_row(lines[i]);
    if (f.size() > header.size() || f.size() < kFixedColumns) {
      throw Error(ErrorCode::kMalformed,
                  "ballot line " + std::to_string(i + 1) +
                      ": wrong number of columns");
    }
    f.resize(header.size());
    Ballot b;
    b.worker_id = std::string(io::trim(f[0]));
    b.assignment_id = std::string(io::trim(f[1]));
    b.pair_id = std::string(io::trim(f[2]));
    b.task = corpus::TaskCode::parse(io::trim(f[3]));
    b.selected = to_set(f[4]);
    b.status = parse_status(f[5]);
    for (std::size_t c = kFixedColumns; c + 1 < f.size(); c += 2) {
      std::string gold_id(io::trim(f[c]));
      if (gold_id.empty()) continue;
      b.gold_answers.push_back({gold_id, to_set(f[c + 1])});
    }
    if (b.pair_id.empty() || b.assignment_id.empty()) {
      throw Error(ErrorCode::kMalformed,
                  "ballot line " + std::to_string(i + 1) +
                      ": empty pair_id or assignment_id");
    }
    ballots.push_back(std::move(b));
  }
  return ballots;
}

std::vector<Ballot> load_ballots(const std::filesystem::path& path) {
  return parse_ballots(io::read_text(path));
}

std::string serialize_ballots(const std::vector<Ballot>& ballots) {
  std::size_t max_gold = 0;
  for (const Ballot& b : ballots) {
    max_gold = std::max(max_gold, b.gold_answers.size());
  }
  std::string out = "worker_id,assignment_id,pair_id,task,selected,status";
  for (std::size_t g = 1; g <= max_gold; ++g) {
    out += ",gold_pair_id_" + std::to_string(g) + ",gold_selected_" +
           std::to_string(g);
  }
  out += '\n';
  for (const Ballot& b : ballots) {
    out += b.worker_id + "," + b.assignment_id + "," + b.pair_id + "," +
           b.task.str() + "," + join_set(b.selected) + "," +
           std::string(status_name(b.status));
    for (std::size_t g = 0; g < max_gold; ++g) {
      if (g < b.gold_answers.size()) {
        out += "," + b.gold_answers[g].gold_pair_id + "," +
               join_set(b.gold_answers[g].selected);
      } else {
        out += ",,";
      }
    }
    out += '\n';
  }
  return out;
}

GoldKey parse_gold_key(std::string_view csv_text) {
  auto lines = io::split_lines(csv_text);
  if (lines.empty()) throw Error(ErrorCode::kMalformed, "empty gold key");
  const std::vector<std::string> expected = {"gold_pair_id", "task",
                                             "correct_options"};
  if (io::split_row(lines[0]) != expected) {
    throw Error(ErrorCode::kMalformed,
                "gold key header must be gold_pair_id,task,correct_options");
  }
  GoldKey key;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (io::trim(lines[i]).empty()) continue;
    auto f = io::split_row(lines[i]);
    if (f.size() != 3) {
      throw Error(ErrorCode::kMalformed,
                  "gold key line " + std::to_string(i + 1) +
                      ": expected 3 columns");
    }
    std::string id(io::trim(f[0]));
    GoldEntry entry{corpus::TaskCode::parse(io::trim(f[1])), to_set(f[2])};
    if (!key.emplace(id, std::move(entry)).second) {
      throw Error(ErrorCode::kDuplicate, "duplicate gold pair id " + id);
    }
  }
  return key;
}

GoldKey load_gold_key(const std::filesystem::path& path) {
  return parse_gold_key(io::read_text(path));
}

std::string serialize_gold_key(const GoldKey& key) {
  std::string out = "gold_pair_id,task,correct_options\n";
  for (const auto& [id, entry] : key) {
    out += id + "," + entry.task.str() + "," + join_set(entry.correct) + "\n";
  }
  return out;
}

void validate_ballots(const std::vector<Ballot>& ballots,
                      const corpus::Registry& registry) {
  for (const Ballot& b : ballots) {
    if (!registry.has_task(b.task)) {
      throw Error(ErrorCode::kUnknownReference,
                  "ballot " + b.assignment_id + ": unknown task " +
                      b.task.str());
    }
    for (const std::string& opt : b.selected) {
      if (registry.find_option(b.task, opt) == nullptr) {
        throw Error(ErrorCode::kUnknownReference,
                    "ballot " + b.assignment_id + ": option '" + opt +
                        "' not in " + b.task.str());
      }
    }
  }
}

}  // namespace tactile::aggregation
