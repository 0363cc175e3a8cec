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

#include "tactile/aggregation/aggregate.h"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "tactile/error.h"
#include "tactile/hashing.h"
#include "tactile/io/text.h"

namespace tactile::aggregation {

using corpus::BinaryRecord;
using corpus::Dimension;
using corpus::OptionDef;
using corpus::TaskCode;

std::string_view threshold_mode_name(ThresholdMode m) {
  return m == ThresholdMode::kRawFraction ? "raw_fraction" : "majority_votes";
}

ThresholdMode parse_threshold_mode(std::string_view name) {
  if (name == "majority_votes") return ThresholdMode::kMajorityVotes;
  if (name == "raw_fraction") return ThresholdMode::kRawFraction;
  throw Error(ErrorCode::kInvalidArgument,
              "threshold mode must be majority_votes or raw_fraction");
}

GoldResult score_gold(const Ballot& ballot, const GoldKey& gold_key,
                      double gold_pass_fraction) {
  GoldResult result;
  for (const GoldAnswer& answer : ballot.gold_answers) {
    auto it = gold_key.find(answer.gold_pair_id);
    if (it == gold_key.end()) {
      throw Error(ErrorCode::kUnknownReference,
                  "ballot " + ballot.assignment_id + ": unknown gold pair '" +
                      answer.gold_pair_id + "'");
    }
    bool ok = answer.selected == it->second.correct;
    result.correct.push_back(ok);
    if (ok) ++result.n_correct;
  }
  if (!result.correct.empty()) {
    double n = static_cast<double>(result.correct.size());
    result.pass = static_cast<double>(result.n_correct) >= gold_pass_fraction * n;
  }
  return result;
}

std::map<std::string, VoteTally, std::less<>> vote_fractions(
    std::span<const Ballot> ballots, std::span<const OptionDef> options) {
  if (ballots.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "vote_fractions: no ballots");
  }
  const Ballot& first = ballots.front();
  for (const Ballot& b : ballots) {
    if (b.pair_id != first.pair_id || b.task != first.task) {
      throw Error(ErrorCode::kInvalidArgument,
                  "vote_fractions: ballots span several (pair, task) groups");
    }
  }
  const int total = static_cast<int>(ballots.size());
  std::map<std::string, VoteTally, std::less<>> out;
  for (const OptionDef& o : options) {
    int n = 0;
    for (const Ballot& b : ballots) n += b.selected.contains(o.id) ? 1 : 0;
    out.emplace(o.id, VoteTally{n, total, static_cast<double>(n) / total});
  }
  return out;
}

bool majority_label(const OptionDef& option, int votes_for, int votes_total,
                    const ThresholdPolicy& policy) {
  if (votes_total < 1) {
    throw Error(ErrorCode::kInvalidArgument, "majority_label: votes_total < 1");
  }
  const long long v = votes_for;
  const long long n = votes_total;
  if (option.task.dimension == Dimension::kQT) {
    const Fraction& f = policy.texture_fraction;
    return v * f.den > f.num * n;
  }
  if (policy.mode == ThresholdMode::kMajorityVotes) {
    return v >= (n + 1) / 2;
  }
  const Fraction& f = policy.default_fraction;
  return v * f.den >= f.num * n;
}

bool is_threshold_tie(Dimension dimension, int votes_for, int votes_total,
                      const ThresholdPolicy& policy) {
  const long long v = votes_for;
  const long long n = votes_total;
  if (dimension == Dimension::kQT) {
    const Fraction& f = policy.texture_fraction;
    return v * f.den == f.num * n;
  }
  if (policy.mode == ThresholdMode::kMajorityVotes) return 2 * v == n;
  const Fraction& f = policy.default_fraction;
  return v * f.den == f.num * n;
}

ConsensusResult consensus_filter(std::span<const Ballot> ballots,
                                 std::span<const OptionDef> options,
                                 const ThresholdPolicy& policy,
                                 const ConsensusConfig& config) {
  ConsensusResult result;
  if (ballots.empty()) return result;
  for (const Ballot& b : ballots) {
    if (b.pair_id != ballots.front().pair_id ||
        b.task != ballots.front().task) {
      throw Error(ErrorCode::kInvalidArgument,
                  "consensus_filter: ballots span several (pair, task) groups");
    }
  }

  std::map<OptionSet, std::vector<std::size_t>> by_vector;
  for (std::size_t i = 0; i < ballots.size(); ++i) {
    by_vector[ballots[i].selected].push_back(i);
  }
  std::vector<bool> keep(ballots.size(), false);
  for (std::size_t i = 0; i < ballots.size(); ++i) {
    if (ballots[i].status == BallotStatus::kApproved) {
      keep[i] = true;
      ++result.approved;
    }
  }
  for (const auto& [vec, idx] : by_vector) {
    if (static_cast<int>(idx.size()) < config.promote_min) continue;
    bool any = false;
    for (std::size_t i : idx) {
      if (!keep[i]) {
        keep[i] = true;
        ++result.promoted;
        any = true;
      }
    }
    if (any) result.promoted_vectors.push_back(vec);
  }
  for (std::size_t i = 0; i < ballots.size(); ++i) {
    if (keep[i]) result.kept.push_back(ballots[i]);
  }

  if (static_cast<int>(result.kept.size()) < config.min_support ||
      result.kept.empty()) {
    for (const OptionDef& o : options) result.dropped.insert(o.id);
    return result;
  }
  auto tallies = vote_fractions(result.kept, options);
  for (const OptionDef& o : options) {
    const VoteTally& t = tallies.at(o.id);
    if (is_threshold_tie(o.task.dimension, t.votes_for, t.votes_total,
                         policy)) {
      result.dropped.insert(o.id);
    }
  }
  return result;
}

corpus::Split assign_split(std::string_view pair_id,
                           const SplitProportions& p) {
  double u = unit_interval(sha256(pair_id));
  if (u < p.train) return corpus::Split::kTrain;
  if (u < p.train + p.val) return corpus::Split::kVal;
  if (p.test <= 0.0) {
    return p.val > 0.0 ? corpus::Split::kVal : corpus::Split::kTrain;
  }
  return corpus::Split::kTest;
}

DatasetBuild build_dataset(const std::vector<Ballot>& ballots,
                           const corpus::Registry& registry,
                           const GoldKey& gold_key,
                           const BuildOptions& options) {
  const SplitProportions& p = options.proportions;
  if (p.train < 0 || p.val < 0 || p.test < 0 ||
      std::abs(p.train + p.val + p.test - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidArgument,
                "split proportions must be non-negative and sum to 1");
  }
  validate_ballots(ballots, registry);

  DatasetBuild out;
  out.summary.ballots = ballots.size();

  std::map<std::pair<std::string, TaskCode>, std::vector<Ballot>> groups;
  std::map<std::pair<std::string, TaskCode>, std::size_t> gold_rejected;
  for (const Ballot& b : ballots) {
    auto key = std::make_pair(b.pair_id, b.task);
    GoldResult gold = score_gold(b, gold_key, options.gold_pass_fraction);
    if (!gold.pass) {
      ++out.summary.gold_rejected;
      ++gold_rejected[key];
      continue;
    }
    groups[key].push_back(b);
  }
  out.summary.groups = groups.size();

  for (const auto& [key, group] : groups) {
    const auto& [pair_id, task] = key;
    std::span<const OptionDef> opts = registry.options(task);
    ConsensusResult cr =
        consensus_filter(group, opts, options.policy, options.consensus);
    out.summary.approved_kept += cr.approved;
    out.summary.promoted += cr.promoted;
    out.summary.status_excluded += group.size() - cr.kept.size();
    out.summary.dropped_options += cr.dropped.size();
    if (cr.kept.empty()) continue;

    auto tallies = vote_fractions(cr.kept, opts);
    std::vector<std::string> assignments;
    for (const Ballot& b : cr.kept) assignments.push_back(b.assignment_id);
    std::sort(assignments.begin(), assignments.end());

    corpus::Provenance prov;
    prov["approved"] = std::to_string(cr.approved);
    prov["promoted"] = std::to_string(cr.promoted);
    prov["excluded"] = std::to_string(group.size() - cr.kept.size());
    auto gr = gold_rejected.find(key);
    prov["gold_rejected"] =
        std::to_string(gr == gold_rejected.end() ? 0 : gr->second);
    prov["assignments"] = io::join(assignments, ";");
    prov["threshold_mode"] =
        std::string(threshold_mode_name(options.policy.mode));

    const corpus::Split split = assign_split(pair_id, p);
    std::vector<const OptionDef*> sorted;
    for (const OptionDef& o : opts) sorted.push_back(&o);
    std::sort(sorted.begin(), sorted.end(),
              [](auto* a, auto* b) { return a->id < b->id; });
    for (const OptionDef* o : sorted) {
      if (cr.dropped.contains(o->id)) continue;
      const VoteTally& t = tallies.at(o->id);
      BinaryRecord r;
      r.pair_id = pair_id;
      r.task = task;
      r.option_id = o->id;
      r.option_desc = o->description;
      r.votes_for = t.votes_for;
      r.votes_total = t.votes_total;
      r.vote_fraction = t.fraction;
      r.label = majority_label(*o, t.votes_for, t.votes_total, options.policy);
      r.split = split;
      r.provenance = prov;
      out.records.push_back(std::move(r));
    }
  }
  out.summary.records = out.records.size();
  return out;
}

}  // namespace tactile::aggregation
