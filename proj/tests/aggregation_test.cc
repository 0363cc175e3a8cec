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

#include <bit>
#include <cmath>

#include "tactile/aggregation/aggregate.h"
#include "tactile/aggregation/ballots.h"
#include "tactile/corpus/records.h"
#include "tactile/error.h"
#include "tactile/hashing.h"
#include "test_util.h"

namespace tactile::aggregation {
namespace {

using corpus::Dimension;
using corpus::OptionDef;
using corpus::TaskCode;
using ::tactile::testing::shipped_registry;

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

const OptionDef& opt(const char* task, const char* id) {
  return shipped_registry().option(TaskCode::parse(task), id);
}

Ballot ballot(const std::string& worker, const std::string& pair,
              const char* task, OptionSet selected,
              BallotStatus status = BallotStatus::kApproved) {
  Ballot b;
  b.worker_id = worker;
  b.assignment_id = "A-" + worker + "-" + pair;
  b.pair_id = pair;
  b.task = TaskCode::parse(task);
  b.selected = std::move(selected);
  b.status = status;
  return b;
}

std::vector<Ballot> ballots_with_votes(const char* task, const char* option,
                                       int votes_for, int total) {
  std::vector<Ballot> out;
  for (int i = 0; i < total; ++i) {
    OptionSet s;
    if (i < votes_for) s.insert(option);
    out.push_back(ballot("W" + std::to_string(i), "p1", task, s));
  }
  return out;
}

// Threshold arithmetic written independently of the implementation: the
// label rule per dimension and mode for 7 workers, spelled out as a table,
// and for other totals via real-valued comparison on exact rationals.
bool oracle_label(Dimension d, ThresholdMode mode, int v, int n) {
  if (n == 7) {
    static const bool qt[8] = {false, false, false, true, true, true, true, true};
    static const bool maj[8] = {false, false, false, false, true, true, true, true};
    static const bool raw[8] = {false, false, false, false, false, true, true, true};
    if (d == Dimension::kQT) return qt[v];
    return mode == ThresholdMode::kMajorityVotes ? maj[v] : raw[v];
  }
  const long double frac = static_cast<long double>(v) / n;
  if (d == Dimension::kQT) return frac > 0.4L + 1e-15L;
  if (mode == ThresholdMode::kMajorityVotes) return v >= std::ceil(n / 2.0);
  return frac >= 0.6L - 1e-15L;
}

TEST(VoteFractionsTest, CountsEveryOption) {
  const auto tallies = vote_fractions(ballots_with_votes("F1QL", "too_thick", 4, 7),
                                      shipped_registry().options(TaskCode::parse("F1QL")));
  EXPECT_EQ(tallies.at("too_thick"), (VoteTally{4, 7, 4.0 / 7.0}));
  EXPECT_EQ(tallies.at("broken_lines"), (VoteTally{0, 7, 0.0}));
  EXPECT_EQ(tallies.size(), 4u);
}

TEST(VoteFractionsTest, ZeroVoteOptionPresent) {
  const auto tallies = vote_fractions(ballots_with_votes("F1QV", "top_view", 2, 7),
                                      shipped_registry().options(TaskCode::parse("F1QV")));
  EXPECT_EQ(tallies.at("view_frontal"), (VoteTally{0, 7, 0.0}));
}

TEST(VoteFractionsTest, SixBallotsAfterRejection) {
  const auto tallies = vote_fractions(ballots_with_votes("F1QL", "too_thick", 3, 6),
                                      shipped_registry().options(TaskCode::parse("F1QL")));
  EXPECT_EQ(tallies.at("too_thick"), (VoteTally{3, 6, 0.5}));
}

TEST(VoteFractionsTest, EmptyBallotListIsError) {
  EXPECT_THROW(vote_fractions({}, shipped_registry().options(TaskCode::parse("F1QL"))),
               Error);
}

TEST(MajorityLabelTest, PaperExamples) {
  const ThresholdPolicy p;
  EXPECT_TRUE(majority_label(opt("F1QL", "too_thick"), 7, 7, p));
  EXPECT_TRUE(majority_label(opt("F1QT", "missing_texture"), 3, 7, p));
  EXPECT_FALSE(majority_label(opt("F1QL", "too_thick"), 3, 7, p));
  for (ThresholdMode m : {ThresholdMode::kMajorityVotes, ThresholdMode::kRawFraction}) {
    ThresholdPolicy q;
    q.mode = m;
    EXPECT_FALSE(majority_label(opt("F1QL", "too_thick"), 0, 7, q));
    EXPECT_FALSE(majority_label(opt("F1QT", "missing_texture"), 0, 7, q));
  }
}

TEST(MajorityLabelTest, FourOfSevenDependsOnMode) {
  ThresholdPolicy p;
  EXPECT_TRUE(majority_label(opt("F1QL", "too_thick"), 4, 7, p));
  p.mode = ThresholdMode::kRawFraction;
  EXPECT_FALSE(majority_label(opt("F1QL", "too_thick"), 4, 7, p));
  EXPECT_TRUE(majority_label(opt("F1QL", "too_thick"), 5, 7, p));
}

TEST(MajorityLabelTest, BruteForceOracleAllDimensions) {
  const char* tasks[] = {"F1QV", "F1QP", "F1QB", "F1QT", "F1QL"};
  for (ThresholdMode mode : {ThresholdMode::kMajorityVotes, ThresholdMode::kRawFraction}) {
    ThresholdPolicy p;
    p.mode = mode;
    for (const char* task : tasks) {
      const OptionDef& o = shipped_registry().options(TaskCode::parse(task))[0];
      for (int n = 1; n <= 7; ++n) {
        for (int v = 0; v <= n; ++v) {
          EXPECT_EQ(majority_label(o, v, n, p),
                    oracle_label(o.task.dimension, mode, v, n))
              << task << " " << v << "/" << n;
        }
      }
    }
  }
}

TEST(MajorityLabelTest, SubsetEnumerationMatchesOracle) {
  // Every subset of n ballots selecting the option, through vote counting.
  const ThresholdPolicy p;
  for (const char* task : {"F2QT", "F2QP"}) {
    const auto options = shipped_registry().options(TaskCode::parse(task));
    const std::string id = options[0].id;
    for (int n = 1; n <= 7; ++n) {
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<Ballot> bs;
        for (int i = 0; i < n; ++i) {
          OptionSet s;
          if (mask & (1u << i)) s.insert(id);
          bs.push_back(ballot("W" + std::to_string(i), "p", task, s));
        }
        const VoteTally t = vote_fractions(bs, options).at(id);
        ASSERT_EQ(t.votes_for, std::popcount(mask));
        EXPECT_EQ(majority_label(options[0], t.votes_for, t.votes_total, p),
                  oracle_label(options[0].task.dimension, p.mode,
                               std::popcount(mask), n));
      }
    }
  }
}

TEST(MajorityLabelTest, MonotoneInVotes) {
  const ThresholdPolicy p;
  for (const char* task : {"F3QV", "F3QT"}) {
    const OptionDef& o = shipped_registry().options(TaskCode::parse(task))[0];
    for (int n = 1; n <= 7; ++n) {
      for (int v = 1; v <= n; ++v) {
        EXPECT_LE(majority_label(o, v - 1, n, p), majority_label(o, v, n, p));
      }
    }
  }
}

TEST(MajorityLabelTest, QtAsymmetryAtThreeOfSeven) {
  const ThresholdPolicy p;
  for (const char* task : {"F4QV", "F4QP", "F4QB", "F4QL"}) {
    EXPECT_FALSE(
        majority_label(shipped_registry().options(TaskCode::parse(task))[0], 3, 7, p));
  }
  EXPECT_TRUE(majority_label(opt("F4QT", "too_dense"), 3, 7, p));
}

TEST(ScoreGoldTest, Fractions) {
  GoldKey key;
  key["g1"] = {TaskCode::parse("F1QL"), {"too_thick"}};
  key["g2"] = {TaskCode::parse("F1QL"), {}};
  key["g3"] = {TaskCode::parse("F1QL"), {"broken_lines", "blurry_lines"}};
  Ballot b = ballot("W", "p", "F1QL", {});
  b.gold_answers = {{"g1", {"too_thick"}}, {"g2", {}}};
  EXPECT_TRUE(score_gold(b, key).pass);
  b.gold_answers[1].selected = {"too_thick"};
  EXPECT_FALSE(score_gold(b, key).pass);
  b.gold_answers = {{"g1", {"too_thick"}}, {"g2", {}}, {"g3", {"broken_lines"}}};
  const GoldResult r = score_gold(b, key, 0.66);
  EXPECT_EQ(r.n_correct, 2u);
  EXPECT_TRUE(r.pass);  // 2/3 >= 0.66
  EXPECT_FALSE(score_gold(b, key, 0.67).pass);
  b.gold_answers = {{"nope", {}}};
  EXPECT_EQ(code_of([&] { score_gold(b, key); }), ErrorCode::kUnknownReference);
}

TEST(ConsensusTest, ApprovedBallotsKept) {
  const auto bs = ballots_with_votes("F1QL", "too_thick", 5, 7);
  const ConsensusResult r = consensus_filter(
      bs, shipped_registry().options(TaskCode::parse("F1QL")), ThresholdPolicy{});
  EXPECT_EQ(r.kept.size(), 7u);
  EXPECT_EQ(r.promoted, 0u);
  EXPECT_TRUE(r.promoted_vectors.empty());
  EXPECT_TRUE(r.dropped.empty());
}

TEST(ConsensusTest, FiveIdenticalRejectedBallotsPromoted) {
  std::vector<Ballot> bs;
  for (int i = 0; i < 5; ++i) {
    bs.push_back(ballot("W" + std::to_string(i), "p", "F1QP", {"missing_parts"},
                        BallotStatus::kRejected));
  }
  const ConsensusResult r = consensus_filter(
      bs, shipped_registry().options(TaskCode::parse("F1QP")), ThresholdPolicy{});
  ASSERT_EQ(r.promoted_vectors.size(), 1u);
  EXPECT_EQ(r.promoted_vectors[0], (OptionSet{"missing_parts"}));
  EXPECT_EQ(r.kept.size(), 5u);
  EXPECT_EQ(r.promoted, 5u);
}

TEST(ConsensusTest, FourUnknownBallotsNotPromoted) {
  std::vector<Ballot> bs;
  for (int i = 0; i < 4; ++i) {
    bs.push_back(ballot("W" + std::to_string(i), "p", "F1QP", {"missing_parts"},
                        BallotStatus::kUnknown));
  }
  const ConsensusResult r = consensus_filter(
      bs, shipped_registry().options(TaskCode::parse("F1QP")), ThresholdPolicy{});
  EXPECT_TRUE(r.promoted_vectors.empty());
  EXPECT_TRUE(r.kept.empty());
  EXPECT_EQ(r.dropped.size(), 4u);
}

TEST(ConsensusTest, TiedOptionDropped) {
  // 3 of 6 under majority mode sits exactly on the boundary.
  const auto bs = ballots_with_votes("F1QL", "too_thick", 3, 6);
  const ConsensusResult r = consensus_filter(
      bs, shipped_registry().options(TaskCode::parse("F1QL")), ThresholdPolicy{});
  EXPECT_EQ(r.dropped, (OptionSet{"too_thick"}));
}

TEST(ConsensusTest, PromotedVectorsCopyInputs) {
  std::vector<Ballot> bs;
  for (int i = 0; i < 6; ++i) {
    bs.push_back(ballot("W" + std::to_string(i), "p", "F1QT",
                        i < 5 ? OptionSet{"too_dense", "missing_texture"}
                              : OptionSet{"too_dense"},
                        BallotStatus::kUnknown));
  }
  const ConsensusResult r = consensus_filter(
      bs, shipped_registry().options(TaskCode::parse("F1QT")), ThresholdPolicy{});
  for (const OptionSet& v : r.promoted_vectors) {
    int copies = 0;
    for (const Ballot& b : bs) copies += b.selected == v ? 1 : 0;
    EXPECT_GE(copies, 5);
  }
  EXPECT_EQ(r.kept.size(), 5u);
}

TEST(AssignSplitTest, DeterministicAndProportional) {
  const SplitProportions p;
  EXPECT_EQ(assign_split("dinosaur_01", p), assign_split("dinosaur_01", p));
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(assign_split("pair" + std::to_string(i), {1.0, 0.0, 0.0}),
              corpus::Split::kTrain);
  }
  // Binomial oracle: 20,000 ids, each count within 5 standard deviations.
  const int n = 20000;
  int counts[3] = {0, 0, 0};
  for (int i = 0; i < n; ++i) {
    ++counts[static_cast<int>(assign_split("id-" + std::to_string(i), p))];
  }
  const double probs[3] = {p.train, p.val, p.test};
  for (int s = 0; s < 3; ++s) {
    const double mean = n * probs[s];
    const double sd = std::sqrt(n * probs[s] * (1 - probs[s]));
    EXPECT_NEAR(counts[s], mean, 5 * sd) << s;
  }
}

TEST(AssignSplitTest, FollowsHashInterval) {
  const SplitProportions p;
  for (int i = 0; i < 500; ++i) {
    const std::string id = "x" + std::to_string(i);
    const double u = unit_interval(sha256(id));
    const corpus::Split expected = u < p.train             ? corpus::Split::kTrain
                                   : u < p.train + p.val ? corpus::Split::kVal
                                                           : corpus::Split::kTest;
    EXPECT_EQ(assign_split(id, p), expected);
  }
}

GoldKey simple_gold() {
  GoldKey key;
  key["g1"] = {TaskCode::parse("F1QL"), {"too_thick"}};
  return key;
}

TEST(BuildDatasetTest, UnanimousDefectGivesOneTrueRecord) {
  auto bs = ballots_with_votes("F1QL", "too_thick", 7, 7);
  for (Ballot& b : bs) b.gold_answers = {{"g1", {"too_thick"}}};
  const DatasetBuild d = build_dataset(bs, shipped_registry(), simple_gold());
  ASSERT_EQ(d.records.size(), 4u);
  int trues = 0;
  for (const corpus::BinaryRecord& r : d.records) {
    trues += r.label ? 1 : 0;
    EXPECT_EQ(r.votes_total, 7);
    if (r.option_id == "too_thick") {
      EXPECT_TRUE(r.label);
      EXPECT_EQ(r.votes_for, 7);
      EXPECT_EQ(r.vote_fraction, 1.0);
    }
    EXPECT_NO_THROW(corpus::validate_record(r, shipped_registry()));
  }
  EXPECT_EQ(trues, 1);
  EXPECT_TRUE(std::is_sorted(d.records.begin(), d.records.end(),
                             [](const auto& a, const auto& b) {
                               return a.option_id < b.option_id;
                             }));
}

TEST(BuildDatasetTest, AllGoldFailuresGiveNoRecords) {
  auto bs = ballots_with_votes("F1QL", "too_thick", 7, 7);
  for (Ballot& b : bs) b.gold_answers = {{"g1", {"broken_lines"}}};
  const DatasetBuild d = build_dataset(bs, shipped_registry(), simple_gold());
  EXPECT_TRUE(d.records.empty());
  EXPECT_EQ(d.summary.gold_rejected, bs.size());
}

TEST(BuildDatasetTest, DeterministicOutput) {
  std::vector<Ballot> bs;
  for (int p = 0; p < 20; ++p) {
    for (int w = 0; w < 7; ++w) {
      OptionSet s;
      if ((p + w) % 3 == 0) s.insert("too_thick");
      if ((p * w) % 4 == 1) s.insert("broken_lines");
      bs.push_back(ballot("W" + std::to_string(w), "pair" + std::to_string(p),
                          "F1QL", s));
    }
  }
  const auto a = build_dataset(bs, shipped_registry(), {});
  std::reverse(bs.begin(), bs.end());
  const auto b = build_dataset(bs, shipped_registry(), {});
  EXPECT_EQ(corpus::serialize_records(a.records), corpus::serialize_records(b.records));
  EXPECT_FALSE(a.records.empty());
}

TEST(BallotsTest, CsvRoundTrip) {
  Ballot b = ballot("W1", "dinosaur_01", "F1QL", {"too_thick", "broken_lines"});
  b.gold_answers = {{"g1", {"too_thick"}}, {"g2", {}}};
  Ballot c = ballot("W2", "dinosaur_01", "F1QL", {}, BallotStatus::kRejected);
  const std::vector<Ballot> in = {b, c};
  const std::vector<Ballot> out = parse_ballots(serialize_ballots(in));
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].selected, b.selected);
  EXPECT_EQ(out[0].gold_answers.size(), 2u);
  EXPECT_EQ(out[0].gold_answers[1].selected, OptionSet{});
  EXPECT_EQ(out[1].status, BallotStatus::kRejected);
  EXPECT_EQ(serialize_ballots(out), serialize_ballots(in));
}

TEST(BallotsTest, ValidateRejectsForeignOption) {
  const std::vector<Ballot> bs = {ballot("W", "p", "F1QL", {"angle_match"})};
  EXPECT_EQ(code_of([&] { validate_ballots(bs, shipped_registry()); }),
            ErrorCode::kUnknownReference);
}

TEST(BallotsTest, GoldKeyParse) {
  const GoldKey k = parse_gold_key(
      "gold_pair_id,task,correct_options\n"
      "g1,F1QL,too_thick;broken_lines\n"
      "g2,F1QV,\n");
  EXPECT_EQ(k.at("g1").correct, (OptionSet{"broken_lines", "too_thick"}));
  EXPECT_TRUE(k.at("g2").correct.empty());
}

}  // namespace
}  // namespace tactile::aggregation
