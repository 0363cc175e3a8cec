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

#ifndef TACTILE_EDITING_ISSUES_H_
#define TACTILE_EDITING_ISSUES_H_

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tactile/corpus/taxonomy.h"
#include "tactile/embedding/embedding.h"
#include "tactile/probe/checkpoint_set.h"

namespace tactile::editing {

struct IssueScore {
  std::string option_id;
  double raw_sigmoid = 0.0;
  double issue_probability = 0.0;
  corpus::Polarity polarity = corpus::Polarity::kDefect;
  bool actionable = false;
};

// Probability that a defect is present: raw for defect options, 1 - raw for
// pass options.
double issue_probability(double raw_sigmoid, corpus::Polarity polarity);

using FeatureFn =
    std::function<embedding::FeatureVector(const corpus::OptionDef&)>;

// One score per registry option of `task`, in registry order. Throws
// Error(kUnknownReference) if an option has no checkpoint.
std::vector<IssueScore> score_issues(const corpus::Registry& registry,
                                     corpus::TaskCode task,
                                     const probe::CheckpointSet& checkpoints,
                                     const FeatureFn& features);

// Issue probability of a single option.
double score_option(const corpus::OptionDef& option,
                    const probe::CheckpointSet& checkpoints,
                    const embedding::FeatureVector& features);

// Highest issue probability among actionable options; ties go to the
// lexicographically smallest id. Throws Error(kInvalidArgument) when no
// option is actionable.
const IssueScore& select_top_issue(std::span<const IssueScore> scores);

}  // namespace tactile::editing

#endif  // TACTILE_EDITING_ISSUES_H_
