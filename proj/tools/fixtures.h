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

#ifndef TACTILE_TOOLS_FIXTURES_H_
#define TACTILE_TOOLS_FIXTURES_H_

#include <cstdint>
#include <filesystem>

#include "tactile/corpus/taxonomy.h"

namespace tactile::tools {

struct FixtureOptions {
  int pairs_per_family = 40;
  int workers = 7;
  int golds_per_task = 3;
  // Probability that a worker gets a gold question wrong.
  double gold_error_rate = 0.04;
  std::uint64_t seed = 7;
};

struct FixtureCorpus {
  std::filesystem::path pairs;
  std::filesystem::path ballots;
  std::filesystem::path gold;
  std::filesystem::path config;
  int pairs_written = 0;
  int ballots_written = 0;
};

// Writes a small synthetic corpus under `dir`: PNG image pairs, pairs.csv,
// ballots.csv, gold.csv and a run.cfg pointing at them. The pair
// "dinosaur_01" always exists in F1. Deterministic per options.
FixtureCorpus write_fixture_corpus(const std::filesystem::path& dir,
                                   const corpus::Registry& registry,
                                   const std::filesystem::path& registry_path,
                                   const std::filesystem::path& templates_path,
                                   const FixtureOptions& options = {});

}  // namespace tactile::tools

#endif  // TACTILE_TOOLS_FIXTURES_H_
