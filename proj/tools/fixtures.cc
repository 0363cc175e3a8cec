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

#include "fixtures.h"

#include <array>
#include <random>
#include <string>
#include <vector>

#include "tactile/aggregation/ballots.h"
#include "tactile/corpus/pairs.h"
#include "tactile/io/files.h"
#include "tactile/io/image.h"

namespace tactile::tools {

namespace fs = std::filesystem;

namespace {

constexpr std::array<std::array<const char*, 4>, 6> kClasses = {{
    {"dinosaur", "cat", "bird", "fish"},
    {"car", "airplane", "bicycle", "boat"},
    {"chair", "table", "house", "bridge"},
    {"hat", "shoe", "watch", "bag"},
    {"hammer", "guitar", "scissors", "wrench"},
    {"apple", "tree", "egg", "flower"},
}};

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

void set(io::Image& img, int x, int y, std::uint8_t r, std::uint8_t g,
         std::uint8_t b) {
  if (x < 0 || y < 0 || x >= img.width || y >= img.height) return;
  std::uint8_t* p = img.pixel(x, y);
  p[0] = r;
  p[1] = g;
  p[2] = b;
  p[3] = 255;
}

// Filled ellipse (natural) and the same ellipse as a black outline (tactile).
std::pair<io::Image, io::Image> draw_pair(std::mt19937_64& rng) {
  const int w = uniform_int(rng, 40, 72);
  const int h = uniform_int(rng, 40, 72);
  const double cx = w / 2.0, cy = h / 2.0;
  const double rx = w * (0.25 + 0.2 * uniform01(rng));
  const double ry = h * (0.25 + 0.2 * uniform01(rng));
  const double stroke = 0.04 + 0.12 * uniform01(rng);
  const auto r = static_cast<std::uint8_t>(uniform_int(rng, 30, 220));
  const auto g = static_cast<std::uint8_t>(uniform_int(rng, 30, 220));
  const auto b = static_cast<std::uint8_t>(uniform_int(rng, 30, 220));
  io::Image natural(w, h), tactile(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double dx = (x + 0.5 - cx) / rx, dy = (y + 0.5 - cy) / ry;
      const double d = dx * dx + dy * dy;
      if (d <= 1.0) set(natural, x, y, r, g, b);
      if (d <= 1.0 && d >= 1.0 - 2 * stroke) set(tactile, x, y, 0, 0, 0);
    }
  }
  return {std::move(natural), std::move(tactile)};
}

std::string two_digits(int i) {
  return (i < 10 ? "0" : "") + std::to_string(i);
}

}  // namespace

FixtureCorpus write_fixture_corpus(const fs::path& dir,
                                   const corpus::Registry& registry,
                                   const fs::path& registry_path,
                                   const fs::path& templates_path,
                                   const FixtureOptions& options) {
  std::mt19937_64 rng(options.seed);
  fs::create_directories(dir / "images");
  FixtureCorpus out;
  out.pairs = dir / "pairs.csv";
  out.ballots = dir / "ballots.csv";
  out.gold = dir / "gold.csv";
  out.config = dir / "run.cfg";

  corpus::PairIndex pairs;
  std::vector<aggregation::Ballot> ballots;
  aggregation::GoldKey gold;

  // Gold questions: one fixed answer set per gold pair.
  std::map<std::string, std::vector<std::string>, std::less<>> gold_by_task;
  for (const corpus::TaskInfo& task : registry.tasks()) {
    for (int g = 1; g <= options.golds_per_task; ++g) {
      const std::string id = "gold_" + task.code.str() + "_" + std::to_string(g);
      aggregation::OptionSet correct;
      correct.insert(task.options[rng() % task.options.size()].id);
      gold.emplace(id, aggregation::GoldEntry{task.code, correct});
      gold_by_task[task.code.str()].push_back(id);
    }
  }

  int assignment = 0;
  for (corpus::Family family : corpus::kAllFamilies) {
    const auto& classes = kClasses[static_cast<int>(family) - 1];
    for (int i = 0; i < options.pairs_per_family; ++i) {
      const std::string cls = classes[i % classes.size()];
      const std::string pair_id = cls + "_" + two_digits(i / classes.size() + 1);
      auto [natural, tactile] = draw_pair(rng);
      const fs::path nat = dir / "images" / (pair_id + "_natural.png");
      const fs::path tac = dir / "images" / (pair_id + "_tactile.png");
      io::write_bytes_atomic(nat, io::encode_png(natural));
      io::write_bytes_atomic(tac, io::encode_png(tactile));
      pairs.add({pair_id, nat, tac, cls, family});

      for (const corpus::TaskInfo& task : registry.tasks()) {
        if (task.code.family != family) continue;
        // Latent per-option defect rates; workers vote independently.
        std::vector<double> rate;
        for (std::size_t k = 0; k < task.options.size(); ++k) {
          rate.push_back(uniform01(rng) < 0.35 ? 0.85 : 0.1);
        }
        const auto& golds = gold_by_task.at(task.code.str());
        for (int w = 0; w < options.workers; ++w) {
          aggregation::Ballot b;
          b.worker_id = "W" + std::to_string(1000 + uniform_int(rng, 0, 59));
          b.assignment_id = "A" + std::to_string(++assignment);
          b.pair_id = pair_id;
          b.task = task.code;
          for (std::size_t k = 0; k < task.options.size(); ++k) {
            if (uniform01(rng) < rate[k]) b.selected.insert(task.options[k].id);
          }
          for (int g = 0; g < 2 && g < static_cast<int>(golds.size()); ++g) {
            const std::string& gid = golds[(w + g) % golds.size()];
            aggregation::OptionSet answer = gold.at(gid).correct;
            if (uniform01(rng) < options.gold_error_rate) {
              answer.insert(task.options[rng() % task.options.size()].id);
              if (answer == gold.at(gid).correct) answer.clear();
            }
            b.gold_answers.push_back({gid, std::move(answer)});
          }
          b.status = uniform01(rng) < 0.9 ? aggregation::BallotStatus::kApproved
                                          : aggregation::BallotStatus::kUnknown;
          ballots.push_back(std::move(b));
        }
      }
    }
  }

  io::write_text_atomic(out.pairs, corpus::serialize_pairs(pairs, dir));
  io::write_text_atomic(out.ballots, aggregation::serialize_ballots(ballots));
  io::write_text_atomic(out.gold, aggregation::serialize_gold_key(gold));

  const fs::path abs = fs::absolute(dir).lexically_normal();
  std::string cfg;
  cfg += "# Fixture run configuration\n";
  cfg += "registry = " + fs::absolute(registry_path).lexically_normal().string() + "\n";
  cfg += "templates = " + fs::absolute(templates_path).lexically_normal().string() + "\n";
  cfg += "pairs = " + (abs / "pairs.csv").string() + "\n";
  cfg += "ballots = " + (abs / "ballots.csv").string() + "\n";
  cfg += "gold = " + (abs / "gold.csv").string() + "\n";
  cfg += "records = " + (abs / "records.jsonl").string() + "\n";
  cfg += "store = " + (abs / "embeddings.temb").string() + "\n";
  cfg += "checkpoints = " + (abs / "checkpoints").string() + "\n";
  cfg += "jobs-dir = " + (abs / "jobs").string() + "\n";
  cfg += "reports = " + (abs / "reports").string() + "\n";
  cfg += "provider = fixture\n";
  cfg += "backend = mock\n";
  cfg += "seed = 0\n";
  io::write_text_atomic(out.config, cfg);

  out.pairs_written = static_cast<int>(pairs.size());
  out.ballots_written = static_cast<int>(ballots.size());
  return out;
}

}  // namespace tactile::tools
