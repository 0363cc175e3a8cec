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

#ifndef TACTILE_EDITING_PIPELINE_H_
#define TACTILE_EDITING_PIPELINE_H_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tactile/corpus/records.h"
#include "tactile/corpus/taxonomy.h"
#include "tactile/editing/backend.h"
#include "tactile/editing/issues.h"
#include "tactile/editing/jobs.h"
#include "tactile/editing/templates.h"
#include "tactile/embedding/features.h"
#include "tactile/probe/checkpoint_set.h"

namespace tactile::editing {

struct EditContext {
  const corpus::Registry& registry;
  const corpus::PairIndex& pairs;
  const TemplateRegistry& templates;
  const probe::CheckpointSet& checkpoints;
  embedding::FeatureBuilder& features;
  EditBackend& backend;
  RetryPolicy retry;
  Clock clock;
  std::filesystem::path jobs_root;
  int output_size = 1024;
};

// Issue scores for the pair's original tactile image.
std::vector<IssueScore> score_pair(EditContext& ctx, std::string_view pair_id,
                                   corpus::TaskCode task);

// Issue probability of one option for the pair with `tactile_png` as the
// tactile image; the natural image is the pair's own.
double score_tactile(EditContext& ctx, std::string_view pair_id,
                     corpus::TaskCode task, const corpus::OptionDef& option,
                     std::span<const std::byte> tactile_png);

// Re-scores an edit with one probe: p_before on the padded original,
// p_after on the edited image.
Rescore rescore(EditContext& ctx, std::string_view pair_id,
                corpus::TaskCode task, const corpus::OptionDef& option,
                std::span<const std::byte> padded_original_png,
                std::span<const std::byte> edited_png);

struct EditOutcome {
  EditJob job;
  std::filesystem::path dir;
};

// score -> select top actionable issue -> prompt -> pad -> submit -> rescore
// -> persist.
EditOutcome run_edit(EditContext& ctx, std::string_view pair_id,
                     corpus::TaskCode task);
// Same with a fixed target option.
EditOutcome run_edit_for_option(EditContext& ctx, std::string_view pair_id,
                                corpus::TaskCode task,
                                const corpus::OptionDef& option);

struct StudyConfig {
  int min_votes = 5;
  double min_probability = 0.80;
  std::size_t n = 15;
};

struct StudyCandidate {
  const corpus::BinaryRecord* record = nullptr;
  double issue_probability = 0.0;
};

// Test-split records of actionable defect options with votes_for >=
// min_votes and issue probability >= min_probability, highest first (ties by
// pair, task, option), truncated to n. `probabilities` is parallel to
// `records`.
std::vector<StudyCandidate> select_study_candidates(
    std::span<const corpus::BinaryRecord> records,
    std::span<const double> probabilities, const corpus::Registry& registry,
    const StudyConfig& config);

struct StudyEntry {
  std::string pair_id;
  std::string task;
  std::string option_id;
  double selection_probability = 0.0;
  double p_before = 0.0;
  double p_after = 0.0;
  double delta = 0.0;
};

struct StudyReport {
  std::vector<StudyEntry> entries;
  std::size_t requested = 0;
  bool short_of_target = false;
  std::size_t improved = 0;
  double mean_delta = 0.0;
  double median_delta = 0.0;
};

double mean(std::span<const double> values);
double median(std::span<const double> values);

// Fills improved / mean / median from the entries.
void summarize(StudyReport& report);

StudyReport batch_edit_study(EditContext& ctx,
                             std::span<const corpus::BinaryRecord> records,
                             const StudyConfig& config = {});

std::string serialize_study(const StudyReport& report);
std::string study_deltas_csv(const StudyReport& report);

}  // namespace tactile::editing

#endif  // TACTILE_EDITING_PIPELINE_H_
