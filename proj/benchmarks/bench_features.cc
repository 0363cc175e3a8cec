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

#include "tactile/embedding/cache.h"
#include "tactile/embedding/embedding.h"
#include "tactile/embedding/provider.h"
#include "tactile/hashing.h"
#include "tactile/io/image.h"

namespace tactile::embedding {
namespace {

void BM_FixtureEmbedding(benchmark::State& state) {
  const Digest h = sha256("bench");
  for (auto _ : state) benchmark::DoNotOptimize(fixture_embedding(h, Modality::kImage));
}
BENCHMARK(BM_FixtureEmbedding);

void BM_AssembleFeatures(benchmark::State& state) {
  const Embedding n = fixture_embedding(sha256("n"), Modality::kImage);
  const Embedding t = fixture_embedding(sha256("t"), Modality::kImage);
  const Embedding x = fixture_embedding(sha256("x"), Modality::kText);
  for (auto _ : state) benchmark::DoNotOptimize(assemble_features(n, t, x));
}
BENCHMARK(BM_AssembleFeatures);

// Warm-cache lookup: hashing the PNG bytes dominates.
void BM_CachedImage(benchmark::State& state) {
  FixtureProvider provider;
  EmbeddingCache cache(provider, EmbeddingStore(provider.id()));
  const int side = static_cast<int>(state.range(0));
  const auto png = io::encode_png(io::Image(side, side, 200));
  cache.image(png);
  for (auto _ : state) benchmark::DoNotOptimize(cache.image(png));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(png.size()));
}
BENCHMARK(BM_CachedImage)->Arg(64)->Arg(512);

}  // namespace
}  // namespace tactile::embedding

BENCHMARK_MAIN();
