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

#include "tactile/editing/jobs.h"

#include <unistd.h>

#include <atomic>
#include <chrono>
#include <ctime>
#include <system_error>

#include "json.hpp"
#include "tactile/error.h"
#include "tactile/io/files.h"

namespace tactile::editing {

namespace fs = std::filesystem;

namespace {

constexpr const char* kPromptFile = "prompt.txt";
constexpr const char* kMetaFile = "meta.json";

void check_component(std::string_view what, std::string_view value) {
  if (value.empty() || value == "." || value == ".." ||
      value.find('/') != std::string_view::npos ||
      value.find('\\') != std::string_view::npos) {
    throw Error(ErrorCode::kInvalidArgument,
                "job " + std::string(what) + " is not a valid path component: '" +
                    std::string(value) + "'");
  }
}

}  // namespace

Clock system_clock_utc() {
  return [] {
    const std::time_t t =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return std::string(buf);
  };
}

Clock fixed_clock(std::string timestamp) {
  return [ts = std::move(timestamp)] { return ts; };
}

std::string serialize_job_meta(const EditJob& job) {
  nlohmann::ordered_json j;
  j["pair_id"] = job.pair_id;
  j["task"] = job.task;
  j["option_id"] = job.option_id;
  j["template_key"] = job.template_key;
  j["prompt"] = job.prompt;
  j["prompt_sha256"] = job.prompt_sha256;
  j["original_width"] = job.original_width;
  j["original_height"] = job.original_height;
  j["padded_size"] = job.padded_size;
  j["offset_x"] = job.offset_x;
  j["offset_y"] = job.offset_y;
  j["backend_id"] = job.backend_id;
  j["request_id"] = job.request_id;
  j["attempts"] = job.attempts;
  j["backend_response"] = job.backend_response;
  j["output_ref"] = job.output_ref;
  j["p_before"] = job.p_before;
  j["p_after"] = job.p_after;
  j["delta"] = job.delta;
  j["started_at"] = job.started_at;
  j["finished_at"] = job.finished_at;
  return j.dump(2) + "\n";
}

EditJob parse_job_meta(std::string_view json_text) {
  EditJob job;
  try {
    const nlohmann::json j = nlohmann::json::parse(json_text);
    job.pair_id = j.at("pair_id").get<std::string>();
    job.task = j.at("task").get<std::string>();
    job.option_id = j.at("option_id").get<std::string>();
    job.template_key = j.at("template_key").get<std::string>();
    job.prompt = j.at("prompt").get<std::string>();
    job.prompt_sha256 = j.at("prompt_sha256").get<std::string>();
    job.original_width = j.at("original_width").get<int>();
    job.original_height = j.at("original_height").get<int>();
    job.padded_size = j.at("padded_size").get<int>();
    job.offset_x = j.at("offset_x").get<int>();
    job.offset_y = j.at("offset_y").get<int>();
    job.backend_id = j.at("backend_id").get<std::string>();
    job.request_id = j.at("request_id").get<std::string>();
    job.attempts = j.at("attempts").get<int>();
    job.backend_response = j.at("backend_response").get<std::string>();
    job.output_ref = j.at("output_ref").get<std::string>();
    job.p_before = j.at("p_before").get<double>();
    job.p_after = j.at("p_after").get<double>();
    job.delta = j.at("delta").get<double>();
    job.started_at = j.at("started_at").get<std::string>();
    job.finished_at = j.at("finished_at").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformed, std::string("job meta: ") + e.what());
  }
  if (job.delta != job.p_before - job.p_after) {
    throw Error(ErrorCode::kInvariant,
                "job meta: delta != p_before - p_after");
  }
  return job;
}

fs::path job_dir(const fs::path& root, const EditJob& job) {
  check_component("pair_id", job.pair_id);
  check_component("task", job.task);
  check_component("option_id", job.option_id);
  return root / job.pair_id / job.task / job.option_id;
}

fs::path write_job(const fs::path& root, const EditJob& job,
                   std::span<const std::byte> edited_png) {
  if (job.delta != job.p_before - job.p_after) {
    throw Error(ErrorCode::kInvariant, "job delta != p_before - p_after");
  }
  const fs::path dir = job_dir(root, job);
  std::error_code ec;
  if (fs::exists(dir, ec)) {
    throw Error(ErrorCode::kAlreadyExists,
                "job directory exists: " + dir.string());
  }
  fs::create_directories(dir.parent_path(), ec);
  if (ec) {
    throw Error(ErrorCode::kIo, "cannot create " + dir.parent_path().string() +
                                    ": " + ec.message());
  }
  static std::atomic<unsigned> counter{0};
  const fs::path staging =
      dir.parent_path() / (".staging-" + job.option_id + "-" +
                           std::to_string(::getpid()) + "-" +
                           std::to_string(counter.fetch_add(1)));
  fs::create_directory(staging, ec);
  if (ec) {
    throw Error(ErrorCode::kIo,
                "cannot create " + staging.string() + ": " + ec.message());
  }
  try {
    io::write_text_atomic(staging / kPromptFile, job.prompt);
    io::write_bytes_atomic(staging / job.output_ref, edited_png);
    io::write_text_atomic(staging / kMetaFile, serialize_job_meta(job));
  } catch (...) {
    fs::remove_all(staging, ec);
    throw;
  }
  // rename(2) onto an existing non-empty directory fails, so a concurrent
  // writer of the same job loses cleanly.
  fs::rename(staging, dir, ec);
  if (ec) {
    fs::remove_all(staging, ec);
    if (fs::exists(dir)) {
      throw Error(ErrorCode::kAlreadyExists,
                  "job directory exists: " + dir.string());
    }
    throw Error(ErrorCode::kIo, "cannot publish job " + dir.string());
  }
  return dir;
}

StoredJob read_job(const fs::path& dir) {
  StoredJob out;
  out.job = parse_job_meta(io::read_text(dir / kMetaFile));
  out.prompt = io::read_text(dir / kPromptFile);
  out.edited_png = dir / out.job.output_ref;
  if (!fs::exists(out.edited_png)) {
    throw Error(ErrorCode::kIo, "missing " + out.edited_png.string());
  }
  return out;
}

}  // namespace tactile::editing
