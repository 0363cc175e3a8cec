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

#include "tactile/editing/issues.h"

#include "tactile/error.h"
#include "tactile/probe/mlp.h"

namespace tactile::editing {

double issue_probability(double raw_sigmoid, corpus::Polarity polarity) {
  return polarity == corpus::Polarity::kPass ? 1.0 - raw_sigmoid : raw_sigmoid;
}

double score_option(const corpus::OptionDef& option,
                    const probe::CheckpointSet& checkpoints,
                    const embedding::FeatureVector& features) {
  const probe::ProbeCheckpoint& ckpt =
      checkpoints.at(option.task.str(), option.id);
  const double logit =
      probe::forward(ckpt.params, std::span<const float>(features.values));
  return issue_probability(probe::sigmoid(logit), option.polarity);
}

std::vector<IssueScore> score_issues(const corpus::Registry& registry,
                                     corpus::TaskCode task,
                                     const probe::CheckpointSet& checkpoints,
                                     const FeatureFn& features) {
  std::vector<IssueScore> out;
  for (const corpus::OptionDef& o : registry.options(task)) {
    const probe::ProbeCheckpoint& ckpt = checkpoints.at(task.str(), o.id);
    embedding::FeatureVector f = features(o);
    const double raw = probe::sigmoid(
        probe::forward(ckpt.params, std::span<const float>(f.values)));
    out.push_back(
        {o.id, raw, issue_probability(raw, o.polarity), o.polarity, o.actionable});
  }
  return out;
}

const IssueScore& select_top_issue(std::span<const IssueScore> scores) {
  const IssueScore* best = nullptr;
  for (const IssueScore& s : scores) {
    if (!s.actionable || s.polarity == corpus::Polarity::kPass) continue;
    if (best == nullptr || s.issue_probability > best->issue_probability ||
        (s.issue_probability == best->issue_probability &&
         s.option_id < best->option_id)) {
      best = &s;
    }
  }
  if (best == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, "no actionable option to repair");
  }
  return *best;
}

}  // namespace tactile::editing
