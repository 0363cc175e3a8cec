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

#ifndef TACTILE_AGGREGATION_AGGREGATE_H_
#define TACTILE_AGGREGATION_AGGREGATE_H_

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tactile/aggregation/ballots.h"
#include "tactile/corpus/records.h"
#include "tactile/corpus/taxonomy.h"

namespace tactile::aggregation {

// Exact rational threshold; compared with integer arithmetic only.
struct Fraction {
  int num = 0;
  int den = 1;
};

enum class ThresholdMode : std::uint8_t { kMajorityVotes, kRawFraction };

std::string_view threshold_mode_name(ThresholdMode m);
ThresholdMode parse_threshold_mode(std::string_view name);

struct ThresholdPolicy {
  ThresholdMode mode = ThresholdMode::kMajorityVotes;
  // Inclusive (>=) in raw_fraction mode.
  Fraction default_fraction{3, 5};
  // Strict (>) for the texture-separation dimension.
  Fraction texture_fraction{2, 5};
  int workers_expected = 7;
};

struct GoldResult {
  bool pass = true;
  std::vector<bool> correct;
  std::size_t n_correct = 0;
};

// Exact option-set match per gold question; passes iff
// n_correct / n_gold >= gold_pass_fraction (vacuously true with no golds).
GoldResult score_gold(const Ballot& ballot, const GoldKey& gold_key,
                      double gold_pass_fraction = 1.0);

struct VoteTally {
  int votes_for = 0;
  int votes_total = 0;
  double fraction = 0.0;

  friend bool operator==(const VoteTally&, const VoteTally&) = default;
};

// One tally for every option of the task, including zero-vote options.
std::map<std::string, VoteTally, std::less<>> vote_fractions(
    std::span<const Ballot> ballots, std::span<const corpus::OptionDef> options);

bool majority_label(const corpus::OptionDef& option, int votes_for,
                    int votes_total, const ThresholdPolicy& policy);

// True when votes_for/votes_total sits exactly on the label boundary.
bool is_threshold_tie(corpus::Dimension dimension, int votes_for,
                      int votes_total, const ThresholdPolicy& policy);

struct ConsensusConfig {
  // Ballots sharing an identical selected set needed for promotion.
  int promote_min = 5;
  // Kept ballots needed before any option of the group is emitted.
  int min_support = 1;
};

struct ConsensusResult {
  std::vector<Ballot> kept;
  std::vector<OptionSet> promoted_vectors;
  OptionSet dropped;
  std::size_t approved = 0;
  std::size_t promoted = 0;
};

// Two-stage filter for one (pair, task) group: keep approved ballots, then
// promote any full selection vector shared by >= promote_min ballots. Options
// that tie on the threshold boundary, or groups with fewer than min_support
// kept ballots, land in `dropped`.
ConsensusResult consensus_filter(std::span<const Ballot> ballots,
                                 std::span<const corpus::OptionDef> options,
                                 const ThresholdPolicy& policy,
                                 const ConsensusConfig& config = {});

struct SplitProportions {
  double train = 0.805;
  double val = 0.095;
  double test = 0.100;
};

// Stable SHA-256 hash of pair_id into [0, 1) against cumulative proportions.
corpus::Split assign_split(std::string_view pair_id,
                           const SplitProportions& proportions);

struct BuildOptions {
  ThresholdPolicy policy;
  SplitProportions proportions;
  ConsensusConfig consensus;
  double gold_pass_fraction = 1.0;
};

struct BuildSummary {
  std::size_t ballots = 0;
  std::size_t groups = 0;
  std::size_t gold_rejected = 0;
  std::size_t approved_kept = 0;
  std::size_t promoted = 0;
  std::size_t status_excluded = 0;
  std::size_t dropped_options = 0;
  std::size_t records = 0;
};

struct DatasetBuild {
  std::vector<corpus::BinaryRecord> records;
  BuildSummary summary;
};

// score_gold -> consensus_filter -> vote_fractions -> majority_label ->
// assign_split. Records are ordered by (pair_id, task, option_id).
DatasetBuild build_dataset(const std::vector<Ballot>& ballots,
                           const corpus::Registry& registry,
                           const GoldKey& gold_key,
                           const BuildOptions& options = {});

}  // namespace tactile::aggregation

#endif  // TACTILE_AGGREGATION_AGGREGATE_H_
