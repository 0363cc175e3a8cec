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

#include <filesystem>
#include <unistd.h>

#include "fixtures.h"
#include "tactile/aggregation/aggregate.h"
#include "tactile/aggregation/ballots.h"
#include "tactile/corpus/taxonomy.h"
#include "tactile/editing/templates.h"

namespace tactile::aggregation {
namespace {

namespace fs = std::filesystem;

const fs::path kData = TACTILE_DATA_DIR;

const corpus::Registry& registry() {
  static const corpus::Registry r = corpus::load_registry(
      kData / "registry.json", editing::load_templates(kData / "templates.json").keys());
  return r;
}

void BM_MajorityLabelTable(benchmark::State& state) {
  const ThresholdPolicy policy;
  const corpus::TaskInfo& task = registry().tasks().front();
  for (auto _ : state) {
    int positives = 0;
    for (int n = 1; n <= 7; ++n) {
      for (int v = 0; v <= n; ++v) {
        positives += majority_label(task.options.front(), v, n, policy) ? 1 : 0;
      }
    }
    benchmark::DoNotOptimize(positives);
  }
}
BENCHMARK(BM_MajorityLabelTable);

struct Corpus {
  std::vector<Ballot> ballots;
  GoldKey gold;
};

const Corpus& fixture_corpus() {
  static const Corpus c = [] {
    const fs::path dir =
        fs::temp_directory_path() / ("tactile-bench-" + std::to_string(::getpid()));
    tools::FixtureOptions opts;
    opts.pairs_per_family = 40;
    const tools::FixtureCorpus fc = tools::write_fixture_corpus(
        dir, registry(), kData / "registry.json", kData / "templates.json", opts);
    Corpus out{load_ballots(fc.ballots), load_gold_key(fc.gold)};
    fs::remove_all(dir);
    return out;
  }();
  return c;
}

void BM_BuildDataset(benchmark::State& state) {
  const Corpus& c = fixture_corpus();
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_dataset(c.ballots, registry(), c.gold));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.ballots.size()));
}
BENCHMARK(BM_BuildDataset)->Unit(benchmark::kMillisecond);

void BM_AssignSplit(benchmark::State& state) {
  std::size_t i = 0;
  const SplitProportions p;
  for (auto _ : state) {
    benchmark::DoNotOptimize(assign_split("pair_" + std::to_string(i++), p));
  }
}
BENCHMARK(BM_AssignSplit);

}  // namespace
}  // namespace tactile::aggregation

BENCHMARK_MAIN();
