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

#include <gtest/gtest.h>

#include <algorithm>

#include "synthetic_records.h"
#include "tactile/corpus/pairs.h"
#include "tactile/corpus/records.h"
#include "tactile/corpus/taxonomy.h"
#include "tactile/error.h"
#include "tactile/io/files.h"
#include "test_util.h"

namespace tactile::corpus {
namespace {

using ::tactile::testing::option_json;
using ::tactile::testing::registry_json;
using ::tactile::testing::shipped_registry;
using ::tactile::testing::TempDir;

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorCode::kInvariant;
}

const std::set<std::string> kKeys = {"too_thick", "broken_lines", "blurry_lines"};

std::string f1ql(const std::string& options) {
  return R"([{"task":"F1QL","question":"q","options":[)" + options + "]}]";
}

TEST(TaskCodeTest, ParseAndPrint) {
  const TaskCode t = TaskCode::parse("F3QT");
  EXPECT_EQ(t.family, Family::kF3);
  EXPECT_EQ(t.dimension, Dimension::kQT);
  EXPECT_EQ(t.str(), "F3QT");
  EXPECT_EQ(code_of([] { TaskCode::parse("F7QT"); }), ErrorCode::kMalformed);
  EXPECT_EQ(code_of([] { TaskCode::parse("F1QX"); }), ErrorCode::kMalformed);
  EXPECT_EQ(code_of([] { TaskCode::parse("F1Q"); }), ErrorCode::kMalformed);
}

TEST(RegistryTest, ShippedRegistryShape) {
  const Registry& r = shipped_registry();
  EXPECT_EQ(r.families().size(), 6u);
  EXPECT_EQ(r.dimensions().size(), 5u);
  EXPECT_EQ(r.tasks().size(), 30u);
  for (const TaskInfo& t : r.tasks()) {
    EXPECT_GE(t.options.size(), 3u) << t.code.str();
    EXPECT_LE(t.options.size(), 7u) << t.code.str();
    for (const OptionDef& o : t.options) {
      if (o.polarity == Polarity::kPass) EXPECT_FALSE(o.actionable);
    }
  }
  // QT is the most granular dimension.
  EXPECT_EQ(r.options(TaskCode::parse("F1QT")).size(), 7u);
  EXPECT_EQ(r.family_name(Family::kF1), "Animals & Creatures");
  EXPECT_EQ(r.family_name(Family::kF2), "Vehicles & Flight");
  EXPECT_EQ(r.family_name(Family::kF6), "Food & Nature");
}

TEST(RegistryTest, F1qvOptionsAndPolarity) {
  const Registry& r = shipped_registry();
  std::vector<std::string> ids;
  for (const OptionDef& o : r.options(TaskCode::parse("F1QV"))) ids.push_back(o.id);
  EXPECT_EQ(ids, (std::vector<std::string>{"angle_match", "view_frontal",
                                           "view_side", "top_view",
                                           "view_perspective"}));
  EXPECT_EQ(r.option(TaskCode::parse("F1QV"), "angle_match").polarity,
            Polarity::kPass);
  EXPECT_EQ(r.options(TaskCode::parse("F2QV")).size(), 6u);
  EXPECT_EQ(r.option(TaskCode::parse("F1QL"), "no_line_issues").polarity,
            Polarity::kPass);
  EXPECT_EQ(r.option(TaskCode::parse("F1QL"), "too_thick").polarity,
            Polarity::kDefect);
}

TEST(RegistryTest, DuplicateOptionIdRejected) {
  const std::string json = registry_json(f1ql(
      option_json("too_thick") + "," + option_json("too_thick") + "," +
      option_json("no_line_issues", true)));
  EXPECT_EQ(code_of([&] { parse_registry(json, kKeys); }), ErrorCode::kDuplicate);
}

TEST(RegistryTest, EmptyFileRejected) {
  EXPECT_EQ(code_of([] { parse_registry("", kKeys); }), ErrorCode::kMalformed);
  EXPECT_EQ(code_of([] { parse_registry(registry_json("[]"), kKeys); }),
            ErrorCode::kMalformed);
}

TEST(RegistryTest, PassOptionCannotBeActionable) {
  std::string pass = option_json("no_line_issues", true);
  pass.replace(pass.find("\"actionable\":false"), 18, "\"actionable\":true");
  const std::string json = registry_json(
      f1ql(option_json("too_thick") + "," + option_json("broken_lines") + "," + pass));
  EXPECT_EQ(code_of([&] { parse_registry(json, kKeys); }), ErrorCode::kInvariant);
}

TEST(RegistryTest, UnresolvableTemplateKeyRejected) {
  const std::string json = registry_json(
      f1ql(option_json("too_thick") + "," + option_json("wobbly") + "," +
           option_json("no_line_issues", true)));
  EXPECT_EQ(code_of([&] { parse_registry(json, kKeys); }),
            ErrorCode::kUnknownReference);
}

TEST(RegistryTest, OptionCountBounds) {
  const std::string two = registry_json(
      f1ql(option_json("too_thick") + "," + option_json("no_line_issues", true)));
  EXPECT_EQ(code_of([&] { parse_registry(two, kKeys); }), ErrorCode::kInvariant);
}

TEST(RegistryTest, MinimalRegistryLoads) {
  const Registry r = parse_registry(
      registry_json(f1ql(option_json("too_thick") + "," +
                         option_json("broken_lines") + "," +
                         option_json("no_line_issues", true))),
      kKeys);
  EXPECT_EQ(r.option_count(), 3u);
  EXPECT_TRUE(r.has_task(TaskCode::parse("F1QL")));
  EXPECT_FALSE(r.has_task(TaskCode::parse("F2QL")));
  EXPECT_EQ(r.find_option(TaskCode::parse("F1QL"), "nope"), nullptr);
}

BinaryRecord sample_record() {
  BinaryRecord r;
  r.pair_id = "dinosaur_01";
  r.task = TaskCode::parse("F1QL");
  r.option_id = "too_thick";
  r.option_desc = "Strokes are overly bold and merge together";
  r.label = true;
  r.votes_for = 7;
  r.votes_total = 7;
  r.vote_fraction = 1.0;
  r.split = Split::kTest;
  r.provenance = {{"approved", "7"}};
  return r;
}

TEST(RecordsTest, VoteFractionMustMatchCounts) {
  BinaryRecord r = sample_record();
  r.votes_for = 4;
  r.vote_fraction = 0.5;
  EXPECT_EQ(code_of([&] { validate_record(r, shipped_registry()); }),
            ErrorCode::kInvariant);
  r.vote_fraction = 4.0 / 7.0;
  EXPECT_NO_THROW(validate_record(r, shipped_registry()));
}

TEST(RecordsTest, UnknownOptionRejected) {
  BinaryRecord r = sample_record();
  r.option_id = "angle_match";
  EXPECT_EQ(code_of([&] { validate_record(r, shipped_registry()); }),
            ErrorCode::kUnknownReference);
}

TEST(RecordsTest, SingleRecordFile) {
  const std::vector<BinaryRecord> one = {sample_record()};
  const RecordSet set = parse_records(serialize_records(one), shipped_registry());
  ASSERT_EQ(set.records.size(), 1u);
  EXPECT_EQ(set.records[0], one[0]);
  EXPECT_EQ(set.counts, (SplitCounts{0, 0, 1}));
}

TEST(RecordsTest, EmptyListIsHeaderOnly) {
  const std::string text = serialize_records({});
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1);
  EXPECT_TRUE(parse_records(text, shipped_registry()).records.empty());
}

TEST(RecordsTest, FieldOrderIsFixed) {
  const std::vector<BinaryRecord> one = {sample_record()};
  const std::string text = serialize_records(one);
  const std::string body = text.substr(text.find('\n') + 1);
  const char* fields[] = {"pair_id", "task",        "option_id", "option_desc",
                          "label",   "vote_fraction", "votes_for", "votes_total",
                          "split",   "provenance"};
  std::size_t last = 0;
  for (const char* f : fields) {
    const std::size_t at = body.find("\"" + std::string(f) + "\":");
    ASSERT_NE(at, std::string::npos) << f;
    EXPECT_GE(at, last) << f;
    last = at;
  }
}

TEST(RecordsTest, DuplicateKeyRejected) {
  const std::vector<BinaryRecord> two = {sample_record(), sample_record()};
  EXPECT_EQ(code_of([&] { parse_records(serialize_records(two), shipped_registry()); }),
            ErrorCode::kDuplicate);
}

TEST(RecordsTest, PairTaskSharesSplit) {
  BinaryRecord a = sample_record();
  BinaryRecord b = sample_record();
  b.option_id = "broken_lines";
  b.split = Split::kTrain;
  const std::vector<BinaryRecord> v = {a, b};
  EXPECT_EQ(code_of([&] { validate_record_set(v); }), ErrorCode::kInvariant);
}

TEST(RecordsTest, HeaderCountMismatchIsCorrupt) {
  const std::vector<BinaryRecord> one = {sample_record()};
  std::string text = serialize_records(one);
  text.replace(text.find("\"count\":1"), 9, "\"count\":2");
  EXPECT_EQ(code_of([&] { parse_records(text, shipped_registry()); }),
            ErrorCode::kCorrupt);
}

TEST(RecordsTest, UnknownFieldRejected) {
  const std::vector<BinaryRecord> one = {sample_record()};
  std::string text = serialize_records(one);
  text.replace(text.rfind('}'), 1, ",\"extra\":1}");
  EXPECT_THROW(parse_records(text, shipped_registry()), Error);
}

TEST(RecordsTest, FullSizeCorpusRoundTrip) {
  const auto records =
      testing::synthetic_records(shipped_registry(), 11348, 1341, 1406);
  const std::string text = serialize_records(records);
  const RecordSet set = parse_records(text, shipped_registry());
  EXPECT_EQ(set.counts, (SplitCounts{11348, 1341, 1406}));
  EXPECT_EQ(set.counts.total(), 14095u);
  EXPECT_EQ(set.records, records);
  EXPECT_EQ(serialize_records(set.records), text);
}

TEST(RecordsTest, WriteAndLoadFile) {
  TempDir dir;
  const std::vector<BinaryRecord> one = {sample_record()};
  write_records(one, dir / "r.jsonl");
  EXPECT_EQ(load_records(dir / "r.jsonl", shipped_registry()).records, one);
}

TEST(PairsTest, ParseResolvesRelativePaths) {
  const PairIndex idx = parse_pairs(
      "pair_id,natural,tactile,object_class,family\n"
      "dinosaur_01,img/n.png,img/t.png,dinosaur,F1\n",
      "/data");
  const ImagePair& p = idx.at("dinosaur_01");
  EXPECT_EQ(p.natural_ref, std::filesystem::path("/data/img/n.png"));
  EXPECT_EQ(p.family, Family::kF1);
  EXPECT_EQ(serialize_pairs(idx, "/data"),
            "pair_id,natural,tactile,object_class,family\n"
            "dinosaur_01,img/n.png,img/t.png,dinosaur,F1\n");
  EXPECT_EQ(code_of([&] { idx.at("nope"); }), ErrorCode::kUnknownReference);
}

TEST(PairsTest, DuplicatePairRejected) {
  EXPECT_EQ(code_of([] {
              parse_pairs(
                  "pair_id,natural,tactile,object_class,family\n"
                  "a,n.png,t.png,cat,F1\n"
                  "a,n.png,t.png,cat,F1\n",
                  "/");
            }),
            ErrorCode::kDuplicate);
}

}  // namespace
}  // namespace tactile::corpus
