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

#include "tactile/probe/train.h"

#include <numeric>
#include <random>

#include "tactile/error.h"

namespace tactile::probe {

namespace {

// Fisher-Yates over raw engine output, so the permutation is identical on
// every standard library.
void shuffle(std::vector<std::size_t>& idx, std::mt19937_64& rng) {
  for (std::size_t i = idx.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(idx[i - 1], idx[j]);
  }
}

void check_dataset(const Dataset& d, const char* name) {
  if (static_cast<std::size_t>(d.x.rows()) != d.y.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(name) + " rows and labels differ in length");
  }
}

}  // namespace

double accuracy(const MlpParams& params, const Dataset& data) {
  if (data.empty()) return 0.0;
  Vector<float> logits = forward_batch(params, data.x);
  std::size_t correct = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    correct += predict_label(logits[i]) == (data.y[i] != 0) ? 1 : 0;
  }
  return static_cast<double>(correct) / static_cast<double>(data.size());
}

double mean_loss(const MlpParams& params, const Dataset& data) {
  if (data.empty()) return 0.0;
  Vector<float> logits = forward_batch(params, data.x);
  double sum = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    sum += bce_loss(logits[i], data.y[i] != 0);
  }
  return sum / static_cast<double>(data.size());
}

ProbeCheckpoint train_option(const Dataset& train, const Dataset& val,
                             const TrainConfig& config,
                             const ProbeIdentity& identity) {
  config.validate();
  check_dataset(train, "train");
  check_dataset(val, "val");
  const std::string who = identity.task + "/" + identity.option_id;
  if (train.size() < static_cast<std::size_t>(config.min_records)) {
    throw Error(ErrorCode::kInsufficientData,
                who + ": " + std::to_string(train.size()) +
                    " training records, need " +
                    std::to_string(config.min_records));
  }
  std::size_t positives = 0;
  for (std::uint8_t y : train.y) positives += y != 0 ? 1 : 0;
  if (positives == 0 || positives == train.size()) {
    throw Error(ErrorCode::kDegenerateData,
                who + ": training labels are single-class");
  }
  if (!val.empty() && val.x.cols() != train.x.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                who + ": train and val feature widths differ");
  }

  const int input_dim = static_cast<int>(train.x.cols());
  std::mt19937_64 rng(config.seed);
  MlpParams params = init_params(input_dim, kHiddenDim, rng());
  AdamWState<float> state = AdamWState<float>::for_params(params);
  MlpGradients<float> grads = MlpParams::zeros(input_dim, kHiddenDim);

  const Dataset& selection = val.empty() ? train : val;
  ProbeCheckpoint ckpt;
  ckpt.task = identity.task;
  ckpt.option_id = identity.option_id;
  ckpt.provider_id = identity.provider_id;
  ckpt.config = config;
  ckpt.selected_on_train = val.empty();
  ckpt.val_accuracy_at_best = -1.0;

  std::vector<std::size_t> order(train.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  RowMatrix<float> batch_x;
  std::vector<std::uint8_t> batch_y;

  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    shuffle(order, rng);
    double loss_sum = 0.0;
    for (std::size_t start = 0; start < order.size();
         start += static_cast<std::size_t>(config.batch_size)) {
      const std::size_t n = std::min<std::size_t>(config.batch_size,
                                                  order.size() - start);
      batch_x.resize(static_cast<Eigen::Index>(n), input_dim);
      batch_y.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        batch_x.row(static_cast<Eigen::Index>(i)) =
            train.x.row(static_cast<Eigen::Index>(order[start + i]));
        batch_y[i] = train.y[order[start + i]];
      }
      double loss = loss_and_gradients(params, batch_x, batch_y, grads);
      loss_sum += loss * static_cast<double>(n);
      adamw_step(params, grads, state, config);
    }
    if (!params.all_finite()) {
      throw Error(ErrorCode::kInvariant, who + ": parameters diverged");
    }
    ckpt.train_loss.push_back(loss_sum / static_cast<double>(train.size()));
    ckpt.val_loss.push_back(mean_loss(params, selection));
    const double acc = accuracy(params, selection);
    ckpt.val_accuracy.push_back(acc);
    if (acc > ckpt.val_accuracy_at_best) {
      ckpt.val_accuracy_at_best = acc;
      ckpt.best_epoch = epoch;
      ckpt.params = params;
    }
  }
  return ckpt;
}

std::filesystem::path checkpoint_path(const std::filesystem::path& dir,
                                      const std::string& task,
                                      const std::string& option_id) {
  return dir / task / (option_id + ".tprb");
}

}  // namespace tactile::probe
