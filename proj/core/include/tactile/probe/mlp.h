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

#ifndef TACTILE_PROBE_MLP_H_
#define TACTILE_PROBE_MLP_H_

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <vector>

namespace tactile::probe {

inline constexpr int kInputDim = 3072;
inline constexpr int kHiddenDim = 512;
inline constexpr int kOutputDim = 1;

template <typename Scalar>
using RowMatrix =
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Linear(input, hidden) -> ReLU -> Linear(hidden, 1).
// Gradients share this layout.
template <typename Scalar>
struct BasicMlpParams {
  RowMatrix<Scalar> w1;  // hidden x input
  Vector<Scalar> b1;     // hidden
  Vector<Scalar> w2;     // the single output row, length hidden
  Scalar b2 = 0;

  static BasicMlpParams zeros(int input_dim, int hidden_dim);

  int input_dim() const { return static_cast<int>(w1.cols()); }
  int hidden_dim() const { return static_cast<int>(w1.rows()); }
  std::size_t parameter_count() const {
    return static_cast<std::size_t>(w1.size() + b1.size() + w2.size() + 1);
  }
  bool all_finite() const;

  friend bool operator==(const BasicMlpParams& a, const BasicMlpParams& b) {
    return a.w1 == b.w1 && a.b1 == b.b1 && a.w2 == b.w2 && a.b2 == b.b2;
  }
};

using MlpParams = BasicMlpParams<float>;

// He-style fan-in uniform weights, zero biases. Deterministic per seed.
MlpParams init_params(int input_dim, int hidden_dim, std::uint64_t seed);

// w2 . relu(w1 x + b1) + b2. Throws Error(kDimensionMismatch) or
// Error(kInvalidArgument) for non-finite input.
template <typename Scalar>
Scalar forward(const BasicMlpParams<Scalar>& params,
               std::span<const Scalar> x);

// Logits for every row of `x`. Rows are processed in fixed-size zero-padded
// chunks, so a row's logit does not depend on its neighbours.
template <typename Scalar>
Vector<Scalar> forward_batch(const BasicMlpParams<Scalar>& params,
                             const RowMatrix<Scalar>& x);

double sigmoid(double z);

// max(z, 0) - z*y + log1p(exp(-|z|)).
double bce_loss(double logit, bool label);

// logit >= 0, equivalently sigmoid(logit) >= 0.5.
inline bool predict_label(double logit) { return logit >= 0.0; }

template <typename Scalar>
using MlpGradients = BasicMlpParams<Scalar>;

// Mean BCE over the batch and its gradient. ReLU'(0) is taken as 0.
// `labels` holds 0/1.
template <typename Scalar>
double loss_and_gradients(const BasicMlpParams<Scalar>& params,
                          const RowMatrix<Scalar>& x,
                          std::span<const std::uint8_t> labels,
                          MlpGradients<Scalar>& grads);

}  // namespace tactile::probe

#endif  // TACTILE_PROBE_MLP_H_
