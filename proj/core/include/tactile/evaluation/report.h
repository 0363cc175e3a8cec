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

#ifndef TACTILE_EVALUATION_REPORT_H_
#define TACTILE_EVALUATION_REPORT_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tactile/corpus/records.h"
#include "tactile/embedding/embedding.h"
#include "tactile/probe/checkpoint_set.h"

namespace tactile::evaluation {

struct Tally {
  std::size_t correct = 0;
  std::size_t total = 0;

  double accuracy() const {
    return total == 0 ? 0.0
                      : static_cast<double>(correct) / static_cast<double>(total);
  }
  void add(bool hit) {
    ++total;
    correct += hit ? 1 : 0;
  }
  friend bool operator==(const Tally&, const Tally&) = default;
};

using OptionKey = std::pair<std::string, std::string>;  // (task, option_id)

// Record-weighted accuracies at every level.
struct EvalReport {
  std::map<OptionKey, Tally> per_option;
  std::map<std::string, Tally> per_task;
  std::map<std::string, Tally> per_family;
  Tally overall;

  // Unweighted mean of task accuracies inside each family. Reported
  // separately; not used by any ordering.
  std::map<std::string, double> family_task_macro() const;

  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

// Tallies predicted labels against record labels.
EvalReport tally_predictions(std::span<const corpus::BinaryRecord> records,
                             std::span<const bool> predicted);

// Runs each record's probe on its features. Throws Error(kUnknownReference)
// for a record whose option has no checkpoint.
std::vector<bool> predict_records(
    const probe::CheckpointSet& checkpoints,
    std::span<const corpus::BinaryRecord> records,
    std::span<const embedding::FeatureVector> features);

EvalReport evaluate(const probe::CheckpointSet& checkpoints,
                    std::span<const corpus::BinaryRecord> records,
                    std::span<const embedding::FeatureVector> features);

struct Ranked {
  std::string key;
  double accuracy = 0.0;
  std::size_t total = 0;
};

// Descending by accuracy, ties by code.
std::vector<Ranked> difficulty_ordering(const EvalReport& report);
std::vector<Ranked> family_ordering(const EvalReport& report);
// Ascending by accuracy, ties by "task/option"; at most k entries.
std::vector<Ranked> bottom_k_options(const EvalReport& report,
                                     std::size_t k = 20);

// per_option.csv, per_task.csv, per_family.csv, summary.csv.
void export_report(const EvalReport& report, const std::filesystem::path& dir);
EvalReport load_report(const std::filesystem::path& dir);

// One row per (option, epoch): task,option_id,epoch,train_loss,val_loss,
// val_accuracy.
std::string format_curves(const probe::CheckpointSet& checkpoints);
void export_curves(const probe::CheckpointSet& checkpoints,
                   const std::filesystem::path& path);

}  // namespace tactile::evaluation

#endif  // TACTILE_EVALUATION_REPORT_H_
