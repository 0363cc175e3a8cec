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

#ifndef TACTILE_PROBE_ADAMW_H_
#define TACTILE_PROBE_ADAMW_H_

#include <cstdint>

#include "tactile/probe/mlp.h"

namespace tactile::probe {

struct TrainConfig {
  double learning_rate = 1e-3;
  int batch_size = 128;
  int epochs = 20;
  std::uint64_t seed = 0;
  double weight_decay = 0.01;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  int min_records = 20;

  // Throws Error(kInvalidArgument).
  void validate() const;

  friend bool operator==(const TrainConfig&, const TrainConfig&) = default;
};

template <typename Scalar>
struct AdamWState {
  BasicMlpParams<Scalar> m;
  BasicMlpParams<Scalar> v;
  std::int64_t step = 0;

  static AdamWState for_params(const BasicMlpParams<Scalar>& params) {
    return {BasicMlpParams<Scalar>::zeros(params.input_dim(),
                                          params.hidden_dim()),
            BasicMlpParams<Scalar>::zeros(params.input_dim(),
                                          params.hidden_dim()),
            0};
  }
};

// One decoupled-weight-decay Adam update on every tensor:
//   p <- p * (1 - lr * wd)
//   m <- b1 m + (1 - b1) g,  v <- b2 v + (1 - b2) g^2
//   p <- p - lr * (m / (1 - b1^t)) / (sqrt(v) / sqrt(1 - b2^t) + eps)
template <typename Scalar>
void adamw_step(BasicMlpParams<Scalar>& params,
                const MlpGradients<Scalar>& grads, AdamWState<Scalar>& state,
                const TrainConfig& config);

// Scalar form of the same update, used for traces.
struct ScalarAdamW {
  double m = 0.0;
  double v = 0.0;
  std::int64_t step = 0;

  double update(double param, double grad, const TrainConfig& config);
};

}  // namespace tactile::probe

#endif  // TACTILE_PROBE_ADAMW_H_
