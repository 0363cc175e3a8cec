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

#include "tactile/probe/checkpoint_set.h"

#include <algorithm>

#include "tactile/error.h"

namespace tactile::probe {

void CheckpointSet::add(ProbeCheckpoint ckpt) {
  auto key = std::make_pair(ckpt.task, ckpt.option_id);
  if (by_key_.contains(key)) {
    throw Error(ErrorCode::kDuplicate,
                "duplicate checkpoint for " + ckpt.task + "/" + ckpt.option_id);
  }
  by_key_.emplace(std::move(key), std::move(ckpt));
}

const ProbeCheckpoint* CheckpointSet::find(std::string_view task,
                                           std::string_view option_id) const {
  auto it = by_key_.find(std::make_pair(std::string(task), std::string(option_id)));
  return it == by_key_.end() ? nullptr : &it->second;
}

const ProbeCheckpoint& CheckpointSet::at(std::string_view task,
                                         std::string_view option_id) const {
  const ProbeCheckpoint* c = find(task, option_id);
  if (c == nullptr) {
    throw Error(ErrorCode::kUnknownReference,
                "missing checkpoint for " + std::string(task) + "/" +
                    std::string(option_id));
  }
  return *c;
}

std::vector<const ProbeCheckpoint*> CheckpointSet::all() const {
  std::vector<const ProbeCheckpoint*> out;
  for (const auto& [key, c] : by_key_) out.push_back(&c);
  return out;
}

CheckpointSet CheckpointSet::load_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error(ErrorCode::kIo, "checkpoint directory " + dir.string() +
                                    " does not exist");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".tprb") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  CheckpointSet set;
  for (const auto& f : files) set.add(load_checkpoint(f));
  return set;
}

}  // namespace tactile::probe
