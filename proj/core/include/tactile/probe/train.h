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

#ifndef TACTILE_PROBE_TRAIN_H_
#define TACTILE_PROBE_TRAIN_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "tactile/probe/adamw.h"
#include "tactile/probe/mlp.h"

namespace tactile::probe {

// Rows of features with 0/1 labels.
struct Dataset {
  RowMatrix<float> x;
  std::vector<std::uint8_t> y;

  std::size_t size() const { return y.size(); }
  bool empty() const { return y.empty(); }
};

struct ProbeCheckpoint {
  MlpParams params;
  std::string task;
  std::string option_id;
  std::string provider_id;
  TrainConfig config;
  // 1-based.
  int best_epoch = 0;
  double val_accuracy_at_best = 0.0;
  // Set when the validation split was empty and selection used train data.
  bool selected_on_train = false;
  std::vector<double> train_loss;
  std::vector<double> val_loss;
  std::vector<double> val_accuracy;
};

struct ProbeIdentity {
  std::string task;
  std::string option_id;
  std::string provider_id;
};

double accuracy(const MlpParams& params, const Dataset& data);
double mean_loss(const MlpParams& params, const Dataset& data);

// Seeded per-epoch shuffle, mini-batch AdamW, validation accuracy after each
// epoch; keeps the parameters of the first epoch reaching peak validation
// accuracy. Throws Error(kInsufficientData) below config.min_records training
// rows and Error(kDegenerateData) if training labels are single-class.
ProbeCheckpoint train_option(const Dataset& train, const Dataset& val,
                             const TrainConfig& config,
                             const ProbeIdentity& identity);

inline constexpr std::uint32_t kCheckpointVersion = 1;

// "TPRB" binary checkpoint; see docs/formats.md.
std::vector<std::byte> serialize_checkpoint(const ProbeCheckpoint& ckpt);
// Throws Error(kCorrupt), Error(kVersionMismatch), or
// Error(kDimensionMismatch) when dims differ from (expected_input, 512, 1).
ProbeCheckpoint parse_checkpoint(std::span<const std::byte> bytes,
                                 int expected_input = kInputDim);

void save_checkpoint(const ProbeCheckpoint& ckpt,
                     const std::filesystem::path& path);
ProbeCheckpoint load_checkpoint(const std::filesystem::path& path,
                                int expected_input = kInputDim);

// <dir>/<task>/<option_id>.tprb
std::filesystem::path checkpoint_path(const std::filesystem::path& dir,
                                      const std::string& task,
                                      const std::string& option_id);

}  // namespace tactile::probe

#endif  // TACTILE_PROBE_TRAIN_H_
