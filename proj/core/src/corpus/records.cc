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

#include "tactile/corpus/records.h"

#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "json.hpp"
#include "tactile/error.h"
#include "tactile/io/files.h"
#include "tactile/io/text.h"

namespace tactile::corpus {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::array<std::string_view, 10> kFieldNames = {
    "pair_id", "task",      "option_id",   "option_desc", "label",
    "vote_fraction", "votes_for", "votes_total", "split", "provenance"};

// Decimal representations of votes_for/votes_total must round-trip to the
// same double; this only absorbs the last-ulp noise of foreign writers.
constexpr double kFractionTolerance = 1e-12;

[[noreturn]] void bad_line(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::kMalformed,
              "records line " + std::to_string(line_no) + ": " + what);
}

BinaryRecord record_from_json(const ordered_json& j, std::size_t line_no) {
  if (!j.is_object()) bad_line(line_no, "record must be an object");
  if (j.size() != kFieldNames.size()) {
    bad_line(line_no, "expected exactly 10 fields");
  }
  for (std::string_view name : kFieldNames) {
    if (!j.contains(name)) {
      bad_line(line_no, "missing field '" + std::string(name) + "'");
    }
  }
  BinaryRecord r;
  try {
    r.pair_id = j.at("pair_id").get<std::string>();
    r.task = TaskCode::parse(j.at("task").get<std::string>());
    r.option_id = j.at("option_id").get<std::string>();
    r.option_desc = j.at("option_desc").get<std::string>();
    r.label = j.at("label").get<bool>();
    if (!j.at("vote_fraction").is_number()) {
      bad_line(line_no, "vote_fraction must be a number");
    }
    r.vote_fraction = j.at("vote_fraction").get<double>();
    if (!j.at("votes_for").is_number_integer() ||
        !j.at("votes_total").is_number_integer()) {
      bad_line(line_no, "vote counts must be integers");
    }
    r.votes_for = j.at("votes_for").get<int>();
    r.votes_total = j.at("votes_total").get<int>();
    r.split = parse_split(j.at("split").get<std::string>());
    for (const auto& [k, v] : j.at("provenance").items()) {
      r.provenance.emplace(k, v.get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    bad_line(line_no, e.what());
  }
  return r;
}

ordered_json record_to_json(const BinaryRecord& r) {
  ordered_json j;
  j["pair_id"] = r.pair_id;
  j["task"] = r.task.str();
  j["option_id"] = r.option_id;
  j["option_desc"] = r.option_desc;
  j["label"] = r.label;
  j["vote_fraction"] = r.vote_fraction;
  j["votes_for"] = r.votes_for;
  j["votes_total"] = r.votes_total;
  j["split"] = std::string(split_name(r.split));
  ordered_json prov = ordered_json::object();
  for (const auto& [k, v] : r.provenance) prov[k] = v;
  j["provenance"] = std::move(prov);
  return j;
}

}  // namespace

std::string_view split_name(Split s) {
  switch (s) {
    case Split::kTrain: return "train";
    case Split::kVal: return "val";
    case Split::kTest: return "test";
  }
  return "train";
}

Split parse_split(std::string_view name) {
  if (name == "train") return Split::kTrain;
  if (name == "val") return Split::kVal;
  if (name == "test") return Split::kTest;
  throw Error(ErrorCode::kMalformed, "unknown split '" + std::string(name) + "'");
}

void SplitCounts::add(Split s) {
  switch (s) {
    case Split::kTrain: ++train; break;
    case Split::kVal: ++val; break;
    case Split::kTest: ++test; break;
  }
}

SplitCounts count_splits(std::span<const BinaryRecord> records) {
  SplitCounts c;
  for (const BinaryRecord& r : records) c.add(r.split);
  return c;
}

void validate_record(const BinaryRecord& r, const Registry& registry) {
  const std::string key = r.pair_id + "/" + r.task.str() + "/" + r.option_id;
  if (r.pair_id.empty()) {
    throw Error(ErrorCode::kMalformed, "record with empty pair_id");
  }
  if (registry.find_option(r.task, r.option_id) == nullptr) {
    throw Error(ErrorCode::kUnknownReference,
                "record " + key + ": option not in registry");
  }
  if (r.votes_total < 1 || r.votes_for < 0 || r.votes_for > r.votes_total) {
    throw Error(ErrorCode::kInvariant, "record " + key + ": invalid vote counts");
  }
  double expected = static_cast<double>(r.votes_for) / r.votes_total;
  if (!(std::fabs(r.vote_fraction - expected) <= kFractionTolerance)) {
    throw Error(ErrorCode::kInvariant,
                "record " + key + ": vote_fraction " +
                    io::format_double(r.vote_fraction) + " != " +
                    std::to_string(r.votes_for) + "/" +
                    std::to_string(r.votes_total));
  }
}

void validate_record_set(std::span<const BinaryRecord> records) {
  std::set<std::tuple<std::string_view, TaskCode, std::string_view>> keys;
  std::map<std::pair<std::string_view, TaskCode>, Split> group_split;
  for (const BinaryRecord& r : records) {
    if (!keys.emplace(r.pair_id, r.task, r.option_id).second) {
      throw Error(ErrorCode::kDuplicate,
                  "duplicate record " + r.pair_id + "/" + r.task.str() + "/" +
                      r.option_id);
    }
    auto [it, inserted] = group_split.emplace(
        std::pair<std::string_view, TaskCode>(r.pair_id, r.task), r.split);
    if (!inserted && it->second != r.split) {
      throw Error(ErrorCode::kInvariant, "pair " + r.pair_id + " task " +
                                             r.task.str() +
                                             " spans several splits");
    }
  }
}

RecordSet parse_records(std::string_view text, const Registry& registry) {
  std::vector<std::string> lines = io::split_lines(text);
  if (lines.empty()) {
    throw Error(ErrorCode::kMalformed, "records file has no header line");
  }
  ordered_json header;
  try {
    header = ordered_json::parse(lines[0]);
  } catch (const nlohmann::json::parse_error& e) {
    bad_line(1, e.what());
  }
  if (!header.is_object() || header.value("format", "") != kRecordsFormat) {
    bad_line(1, "not a tactile records header");
  }
  if (header.value("version", -1) != kRecordsVersion) {
    throw Error(ErrorCode::kVersionMismatch, "unsupported records version");
  }

  RecordSet out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    ordered_json j;
    try {
      j = ordered_json::parse(lines[i]);
    } catch (const nlohmann::json::parse_error& e) {
      bad_line(i + 1, e.what());
    }
    BinaryRecord r = record_from_json(j, i + 1);
    validate_record(r, registry);
    out.counts.add(r.split);
    out.records.push_back(std::move(r));
  }
  if (header.contains("count") &&
      header["count"].get<std::size_t>() != out.records.size()) {
    throw Error(ErrorCode::kCorrupt, "records header count does not match body");
  }
  validate_record_set(out.records);
  return out;
}

RecordSet load_records(const std::filesystem::path& path,
                       const Registry& registry) {
  return parse_records(io::read_text(path), registry);
}

std::string serialize_records(std::span<const BinaryRecord> records) {
  ordered_json header;
  header["format"] = std::string(kRecordsFormat);
  header["version"] = kRecordsVersion;
  header["count"] = records.size();
  std::string out = header.dump();
  out += '\n';
  for (const BinaryRecord& r : records) {
    out += record_to_json(r).dump();
    out += '\n';
  }
  return out;
}

void write_records(std::span<const BinaryRecord> records,
                   const std::filesystem::path& path) {
  io::write_text_atomic(path, serialize_records(records));
}

}  // namespace tactile::corpus
