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

// Writes a small synthetic corpus for demos and end-to-end tests.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "fixtures.h"
#include "tactile/editing/templates.h"
#include "tactile/error.h"

int main(int argc, char** argv) {
  CLI::App app{"Generate a synthetic fixture corpus", "tactile_make_fixtures"};
  std::string out_dir, registry, templates;
  tactile::tools::FixtureOptions options;
  app.add_option("--out", out_dir, "Output directory")->required();
  app.add_option("--registry", registry, "Option registry")->required();
  app.add_option("--templates", templates, "Template registry")->required();
  app.add_option("--pairs-per-family", options.pairs_per_family)
      ->capture_default_str();
  app.add_option("--seed", options.seed)->capture_default_str();
  CLI11_PARSE(app, argc, argv);
  try {
    const auto tpl = tactile::editing::load_templates(templates);
    const auto reg = tactile::corpus::load_registry(registry, tpl.keys());
    const auto corpus = tactile::tools::write_fixture_corpus(
        out_dir, reg, registry, templates, options);
    std::cout << "pairs=" << corpus.pairs_written
              << " ballots=" << corpus.ballots_written << "\n"
              << "config=" << corpus.config.string() << "\n";
  } catch (const tactile::Error& e) {
    std::cerr << "error: code=" << tactile::error_code_name(e.code())
              << " message=\"" << e.what() << "\"\n";
    return 1;
  }
  return 0;
}
