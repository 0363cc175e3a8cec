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

#ifndef TACTILE_EDITING_JOBS_H_
#define TACTILE_EDITING_JOBS_H_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>

namespace tactile::editing {

// One diagnosed issue routed through the edit backend, with its audit trail.
struct EditJob {
  std::string pair_id;
  std::string task;
  std::string option_id;
  std::string template_key;
  std::string prompt;
  std::string prompt_sha256;
  int original_width = 0;
  int original_height = 0;
  int padded_size = 0;
  int offset_x = 0;
  int offset_y = 0;
  std::string backend_id;
  std::string request_id;
  int attempts = 0;
  // Backend response text, image payloads elided, kept verbatim.
  std::string backend_response;
  std::string output_ref = "edited.png";
  double p_before = 0.0;
  double p_after = 0.0;
  double delta = 0.0;
  std::string started_at;
  std::string finished_at;

  friend bool operator==(const EditJob&, const EditJob&) = default;
};

struct Rescore {
  double p_before = 0.0;
  double p_after = 0.0;
  double delta = 0.0;
};

// delta = p_before - p_after; positive means the issue got less likely.
inline Rescore make_rescore(double p_before, double p_after) {
  return {p_before, p_after, p_before - p_after};
}

// Timestamp source for job metadata.
using Clock = std::function<std::string()>;
Clock system_clock_utc();
// Always returns the same instant, for reproducible mock runs.
Clock fixed_clock(std::string timestamp = "1970-01-01T00:00:00Z");

std::string serialize_job_meta(const EditJob& job);
EditJob parse_job_meta(std::string_view json_text);

// <root>/<pair_id>/<task>/<option_id>
std::filesystem::path job_dir(const std::filesystem::path& root,
                              const EditJob& job);

// Writes prompt.txt, edited.png and meta.json into a staging directory and
// renames it into place. Throws Error(kAlreadyExists) if the job directory
// exists; jobs are never overwritten.
std::filesystem::path write_job(const std::filesystem::path& root,
                                const EditJob& job,
                                std::span<const std::byte> edited_png);

struct StoredJob {
  EditJob job;
  std::string prompt;
  std::filesystem::path edited_png;
};

StoredJob read_job(const std::filesystem::path& dir);

}  // namespace tactile::editing

#endif  // TACTILE_EDITING_JOBS_H_
