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

#ifndef TACTILE_EDITING_BACKEND_H_
#define TACTILE_EDITING_BACKEND_H_

#include <chrono>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace tactile::editing {

struct EditRequest {
  std::vector<std::byte> image_png;
  std::string prompt;
  int output_size = 1024;
};

struct EditResponse {
  std::vector<std::byte> image_png;
  std::string request_id;
  // Backend response with image payloads elided, kept for the audit trail.
  std::string raw_metadata;
};

// Vendor-neutral image edit endpoint. Implementations signal retryable
// failures with Error(kTransient) or Error(kRateLimited).
class EditBackend {
 public:
  virtual ~EditBackend() = default;
  virtual std::string id() const = 0;
  virtual EditResponse edit(const EditRequest& request) = 0;
};

// Returns the base image unchanged; metadata carries the prompt digest. The
// first `transient_failures` calls fail with Error(kTransient).
class MockBackend final : public EditBackend {
 public:
  explicit MockBackend(int transient_failures = 0)
      : failures_left_(transient_failures) {}

  std::string id() const override { return "mock"; }
  EditResponse edit(const EditRequest& request) override;

  int calls() const { return calls_; }

 private:
  int failures_left_;
  int calls_ = 0;
};

struct HttpBackendConfig {
  // scheme://host[:port]
  std::string base_url = "https://api.openai.com";
  std::string path = "/v1/images/edits";
  std::string model = "gpt-image-1";
  std::string api_key_env = "TACTILE_EDIT_API_KEY";
  std::chrono::seconds timeout{120};
};

// Multipart image-edit client. The API key comes from the environment;
// without it every call fails with Error(kAuth) before anything is sent.
class HttpBackend final : public EditBackend {
 public:
  explicit HttpBackend(HttpBackendConfig config);

  std::string id() const override { return "http:" + config_.model; }
  EditResponse edit(const EditRequest& request) override;

  bool has_credentials() const { return !api_key_.empty(); }

 private:
  HttpBackendConfig config_;
  std::string api_key_;
};

struct RetryPolicy {
  int max_attempts = 3;
  std::chrono::milliseconds base_delay{500};
  double multiplier = 2.0;
  // Defaults to std::this_thread::sleep_for.
  std::function<void(std::chrono::milliseconds)> sleep;
};

struct SubmitResult {
  EditResponse response;
  int attempts = 0;
};

// Retries transient and rate-limit failures with exponential backoff.
SubmitResult submit_edit(EditBackend& backend, const EditRequest& request,
                         const RetryPolicy& policy = {});

}  // namespace tactile::editing

#endif  // TACTILE_EDITING_BACKEND_H_
