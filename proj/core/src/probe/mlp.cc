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

#include "tactile/probe/mlp.h"

#include <cmath>
#include <random>

#include "tactile/error.h"

namespace tactile::probe {

namespace {

// Chunk height for forward_batch.
constexpr Eigen::Index kChunkRows = 32;

template <typename Scalar>
void check_shapes(const BasicMlpParams<Scalar>& p, Eigen::Index cols) {
  if (cols != p.w1.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "feature width " + std::to_string(cols) + " != probe input " +
                    std::to_string(p.w1.cols()));
  }
}

double uniform(std::mt19937_64& rng, double bound) {
  double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return (2.0 * u - 1.0) * bound;
}

}  // namespace

template <typename Scalar>
BasicMlpParams<Scalar> BasicMlpParams<Scalar>::zeros(int input_dim,
                                                     int hidden_dim) {
  BasicMlpParams p;
  p.w1 = RowMatrix<Scalar>::Zero(hidden_dim, input_dim);
  p.b1 = Vector<Scalar>::Zero(hidden_dim);
  p.w2 = Vector<Scalar>::Zero(hidden_dim);
  p.b2 = 0;
  return p;
}

template <typename Scalar>
bool BasicMlpParams<Scalar>::all_finite() const {
  return w1.allFinite() && b1.allFinite() && w2.allFinite() &&
         std::isfinite(static_cast<double>(b2));
}

MlpParams init_params(int input_dim, int hidden_dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  MlpParams p = MlpParams::zeros(input_dim, hidden_dim);
  const double bound1 = std::sqrt(6.0 / input_dim);
  for (Eigen::Index i = 0; i < p.w1.size(); ++i) {
    p.w1.data()[i] = static_cast<float>(uniform(rng, bound1));
  }
  const double bound2 = std::sqrt(6.0 / hidden_dim);
  for (Eigen::Index i = 0; i < p.w2.size(); ++i) {
    p.w2[i] = static_cast<float>(uniform(rng, bound2));
  }
  return p;
}

template <typename Scalar>
Scalar forward(const BasicMlpParams<Scalar>& params,
               std::span<const Scalar> x) {
  check_shapes(params, static_cast<Eigen::Index>(x.size()));
  RowMatrix<Scalar> row(1, x.size());
  for (std::size_t i = 0; i < x.size(); ++i) row(0, i) = x[i];
  return forward_batch(params, row)[0];
}

template <typename Scalar>
Vector<Scalar> forward_batch(const BasicMlpParams<Scalar>& params,
                             const RowMatrix<Scalar>& x) {
  check_shapes(params, x.cols());
  if (!x.allFinite()) {
    throw Error(ErrorCode::kInvalidArgument, "non-finite probe input");
  }
  const Eigen::Index n = x.rows();
  Vector<Scalar> out(n);
  RowMatrix<Scalar> chunk(kChunkRows, x.cols());
  RowMatrix<Scalar> hidden(kChunkRows, params.hidden_dim());
  for (Eigen::Index start = 0; start < n; start += kChunkRows) {
    const Eigen::Index rows = std::min(kChunkRows, n - start);
    chunk.setZero();
    chunk.topRows(rows) = x.middleRows(start, rows);
    hidden.noalias() = chunk * params.w1.transpose();
    hidden.rowwise() += params.b1.transpose();
    hidden = hidden.cwiseMax(Scalar(0));
    Vector<Scalar> z = hidden * params.w2;
    for (Eigen::Index r = 0; r < rows; ++r) out[start + r] = z[r] + params.b2;
  }
  return out;
}

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  double e = std::exp(z);
  return e / (1.0 + e);
}

double bce_loss(double logit, bool label) {
  const double y = label ? 1.0 : 0.0;
  return std::max(logit, 0.0) - logit * y + std::log1p(std::exp(-std::fabs(logit)));
}

template <typename Scalar>
double loss_and_gradients(const BasicMlpParams<Scalar>& params,
                          const RowMatrix<Scalar>& x,
                          std::span<const std::uint8_t> labels,
                          MlpGradients<Scalar>& grads) {
  check_shapes(params, x.cols());
  const Eigen::Index n = x.rows();
  if (n == 0 || static_cast<std::size_t>(n) != labels.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "gradient batch must be non-empty with one label per row");
  }
  RowMatrix<Scalar> pre = x * params.w1.transpose();
  pre.rowwise() += params.b1.transpose();
  RowMatrix<Scalar> act = pre.cwiseMax(Scalar(0));
  Vector<Scalar> z = act * params.w2;
  z.array() += params.b2;

  double loss = 0.0;
  Vector<Scalar> dz(n);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double zi = static_cast<double>(z[i]);
    const bool yi = labels[i] != 0;
    loss += bce_loss(zi, yi);
    dz[i] = static_cast<Scalar>((sigmoid(zi) - (yi ? 1.0 : 0.0)) * inv_n);
  }

  grads.w2.noalias() = act.transpose() * dz;
  grads.b2 = dz.sum();
  RowMatrix<Scalar> dpre = dz * params.w2.transpose();
  dpre = (pre.array() > Scalar(0)).select(dpre, Scalar(0));
  grads.w1.noalias() = dpre.transpose() * x;
  grads.b1 = dpre.colwise().sum().transpose();
  return loss * inv_n;
}

template struct BasicMlpParams<float>;
template struct BasicMlpParams<double>;
template float forward(const BasicMlpParams<float>&, std::span<const float>);
template double forward(const BasicMlpParams<double>&, std::span<const double>);
template Vector<float> forward_batch(const BasicMlpParams<float>&,
                                     const RowMatrix<float>&);
template Vector<double> forward_batch(const BasicMlpParams<double>&,
                                      const RowMatrix<double>&);
template double loss_and_gradients(const BasicMlpParams<float>&,
                                   const RowMatrix<float>&,
                                   std::span<const std::uint8_t>,
                                   MlpGradients<float>&);
template double loss_and_gradients(const BasicMlpParams<double>&,
                                   const RowMatrix<double>&,
                                   std::span<const std::uint8_t>,
                                   MlpGradients<double>&);

}  // namespace tactile::probe
