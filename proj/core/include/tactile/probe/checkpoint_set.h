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

#ifndef TACTILE_PROBE_CHECKPOINT_SET_H_
#define TACTILE_PROBE_CHECKPOINT_SET_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tactile/probe/train.h"

namespace tactile::probe {

// Trained probes keyed by (task, option_id).
class CheckpointSet {
 public:
  void add(ProbeCheckpoint ckpt);

  const ProbeCheckpoint* find(std::string_view task,
                              std::string_view option_id) const;
  // Throws Error(kUnknownReference) when no probe exists for the option.
  const ProbeCheckpoint& at(std::string_view task,
                            std::string_view option_id) const;

  std::size_t size() const { return by_key_.size(); }
  std::vector<const ProbeCheckpoint*> all() const;

  // Reads every <dir>/<task>/<option>.tprb.
  static CheckpointSet load_dir(const std::filesystem::path& dir);

 private:
  std::map<std::pair<std::string, std::string>, ProbeCheckpoint, std::less<>>
      by_key_;
};

}  // namespace tactile::probe

#endif  // TACTILE_PROBE_CHECKPOINT_SET_H_
