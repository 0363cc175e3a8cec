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

#include "tactile/probe/adamw.h"

#include <cmath>

#include "tactile/error.h"

namespace tactile::probe {

void TrainConfig::validate() const {
  if (!(learning_rate > 0)) {
    throw Error(ErrorCode::kInvalidArgument, "learning_rate must be > 0");
  }
  if (!(beta1 >= 0 && beta1 < 1) || !(beta2 >= 0 && beta2 < 1)) {
    throw Error(ErrorCode::kInvalidArgument, "betas must lie in [0, 1)");
  }
  if (epochs < 1) throw Error(ErrorCode::kInvalidArgument, "epochs must be >= 1");
  if (batch_size < 1) {
    throw Error(ErrorCode::kInvalidArgument, "batch_size must be >= 1");
  }
  if (!(weight_decay >= 0) || !(epsilon > 0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "weight_decay must be >= 0 and epsilon > 0");
  }
}

namespace {

template <typename Tensor, typename Scalar>
void update_tensor(Tensor& p, const Tensor& g, Tensor& m, Tensor& v,
                   Scalar decay, Scalar b1, Scalar b2, Scalar step_size,
                   Scalar sqrt_bc2, Scalar eps) {
  p.array() *= decay;
  m.array() = b1 * m.array() + (Scalar(1) - b1) * g.array();
  v.array() = b2 * v.array() + (Scalar(1) - b2) * g.array().square();
  p.array() -= step_size * m.array() / (v.array().sqrt() / sqrt_bc2 + eps);
}

}  // namespace

template <typename Scalar>
void adamw_step(BasicMlpParams<Scalar>& params,
                const MlpGradients<Scalar>& grads, AdamWState<Scalar>& state,
                const TrainConfig& config) {
  if (state.m.w1.rows() != params.w1.rows() ||
      state.m.w1.cols() != params.w1.cols() ||
      grads.w1.rows() != params.w1.rows() ||
      grads.w1.cols() != params.w1.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "optimizer state does not match parameter shapes");
  }
  ++state.step;
  const double t = static_cast<double>(state.step);
  const double bc1 = 1.0 - std::pow(config.beta1, t);
  const double bc2 = 1.0 - std::pow(config.beta2, t);
  const Scalar decay = static_cast<Scalar>(1.0 - config.learning_rate *
                                                     config.weight_decay);
  const Scalar b1 = static_cast<Scalar>(config.beta1);
  const Scalar b2 = static_cast<Scalar>(config.beta2);
  const Scalar step_size = static_cast<Scalar>(config.learning_rate / bc1);
  const Scalar sqrt_bc2 = static_cast<Scalar>(std::sqrt(bc2));
  const Scalar eps = static_cast<Scalar>(config.epsilon);

  update_tensor(params.w1, grads.w1, state.m.w1, state.v.w1, decay, b1, b2,
                step_size, sqrt_bc2, eps);
  update_tensor(params.b1, grads.b1, state.m.b1, state.v.b1, decay, b1, b2,
                step_size, sqrt_bc2, eps);
  update_tensor(params.w2, grads.w2, state.m.w2, state.v.w2, decay, b1, b2,
                step_size, sqrt_bc2, eps);
  params.b2 *= decay;
  state.m.b2 = b1 * state.m.b2 + (Scalar(1) - b1) * grads.b2;
  state.v.b2 = b2 * state.v.b2 + (Scalar(1) - b2) * grads.b2 * grads.b2;
  params.b2 -= step_size * state.m.b2 / (std::sqrt(state.v.b2) / sqrt_bc2 + eps);
}

double ScalarAdamW::update(double param, double grad,
                           const TrainConfig& config) {
  ++step;
  const double t = static_cast<double>(step);
  param *= 1.0 - config.learning_rate * config.weight_decay;
  m = config.beta1 * m + (1.0 - config.beta1) * grad;
  v = config.beta2 * v + (1.0 - config.beta2) * grad * grad;
  const double bc1 = 1.0 - std::pow(config.beta1, t);
  const double bc2 = 1.0 - std::pow(config.beta2, t);
  return param - config.learning_rate / bc1 * m /
                     (std::sqrt(v) / std::sqrt(bc2) + config.epsilon);
}

template void adamw_step(BasicMlpParams<float>&, const MlpGradients<float>&,
                         AdamWState<float>&, const TrainConfig&);
template void adamw_step(BasicMlpParams<double>&, const MlpGradients<double>&,
                         AdamWState<double>&, const TrainConfig&);

}  // namespace tactile::probe
