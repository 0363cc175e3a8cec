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

#ifndef TACTILE_TESTS_SYNTHETIC_RECORDS_H_
#define TACTILE_TESTS_SYNTHETIC_RECORDS_H_

#include <cstddef>
#include <string>
#include <vector>

#include "tactile/corpus/records.h"
#include "tactile/corpus/taxonomy.h"
#include "tactile/hashing.h"

namespace tactile::testing {

// Records with exactly the requested split sizes. Pairs cycle through the
// registry tasks; each (pair, task) group stays inside one split.
inline std::vector<corpus::BinaryRecord> synthetic_records(
    const corpus::Registry& registry, std::size_t train, std::size_t val,
    std::size_t test) {
  std::vector<corpus::BinaryRecord> out;
  const std::vector<corpus::TaskInfo>& tasks = registry.tasks();
  std::size_t task_cursor = 0;
  std::size_t pair_no = 0;
  const std::pair<corpus::Split, std::size_t> quotas[] = {
      {corpus::Split::kTrain, train},
      {corpus::Split::kVal, val},
      {corpus::Split::kTest, test}};
  for (const auto& [split, quota] : quotas) {
    std::size_t emitted = 0;
    while (emitted < quota) {
      const corpus::TaskInfo& task = tasks[task_cursor++ % tasks.size()];
      const std::string pair_id = "syn_" + std::to_string(pair_no++);
      for (const corpus::OptionDef& o : task.options) {
        if (emitted == quota) break;
        const Digest h = sha256(pair_id + "/" + o.id);
        corpus::BinaryRecord r;
        r.pair_id = pair_id;
        r.task = task.code;
        r.option_id = o.id;
        r.option_desc = o.description;
        r.votes_total = 7;
        r.votes_for = h[0] % 8;
        r.vote_fraction = r.votes_for / 7.0;
        r.label = task.code.dimension == corpus::Dimension::kQT
                      ? r.votes_for >= 3
                      : r.votes_for >= 4;
        r.split = split;
        r.provenance = {{"approved", "7"}, {"source", "synthetic"}};
        out.push_back(std::move(r));
        ++emitted;
      }
    }
  }
  return out;
}

}  // namespace tactile::testing

#endif  // TACTILE_TESTS_SYNTHETIC_RECORDS_H_
