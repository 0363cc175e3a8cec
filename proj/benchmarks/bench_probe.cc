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

#include <benchmark/benchmark.h>

#include <random>

#include "tactile/probe/adamw.h"
#include "tactile/probe/mlp.h"
#include "tactile/probe/train.h"

namespace tactile::probe {
namespace {

RowMatrix<float> random_rows(int rows, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<float> g(0.0f, 0.02f);
  RowMatrix<float> x(rows, kInputDim);
  for (Eigen::Index i = 0; i < x.size(); ++i) x.data()[i] = g(rng);
  return x;
}

void BM_Forward(benchmark::State& state) {
  const MlpParams p = init_params(kInputDim, kHiddenDim, 1);
  const RowMatrix<float> x = random_rows(1, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(forward<float>(p, std::span(x.data(), kInputDim)));
  }
}
BENCHMARK(BM_Forward);

void BM_ForwardBatch(benchmark::State& state) {
  const MlpParams p = init_params(kInputDim, kHiddenDim, 1);
  const RowMatrix<float> x = random_rows(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(forward_batch(p, x));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ForwardBatch)->Arg(32)->Arg(128)->Arg(1406);

void BM_LossAndGradients(benchmark::State& state) {
  const MlpParams p = init_params(kInputDim, kHiddenDim, 1);
  const int n = static_cast<int>(state.range(0));
  const RowMatrix<float> x = random_rows(n, 4);
  std::vector<std::uint8_t> y(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = i % 2;
  MlpGradients<float> g = MlpParams::zeros(kInputDim, kHiddenDim);
  for (auto _ : state) benchmark::DoNotOptimize(loss_and_gradients(p, x, y, g));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_LossAndGradients)->Arg(1)->Arg(128);

void BM_AdamWStep(benchmark::State& state) {
  MlpParams p = init_params(kInputDim, kHiddenDim, 1);
  MlpGradients<float> g = init_params(kInputDim, kHiddenDim, 2);
  AdamWState<float> s = AdamWState<float>::for_params(p);
  const TrainConfig cfg;
  for (auto _ : state) adamw_step(p, g, s, cfg);
}
BENCHMARK(BM_AdamWStep);

// One full training epoch per iteration.
void BM_TrainEpoch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Dataset d;
  d.x = random_rows(n, 5);
  for (int i = 0; i < n; ++i) d.y.push_back(d.x(i, 0) > 0 ? 1 : 0);
  TrainConfig cfg;
  cfg.epochs = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(train_option(d, {}, cfg, {"F1QL", "bench", "bench"}));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_TrainEpoch)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace tactile::probe

BENCHMARK_MAIN();
