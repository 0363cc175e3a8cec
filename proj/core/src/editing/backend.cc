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

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "tactile/editing/backend.h"

#include <openssl/evp.h>

#include <cmath>
#include <cstdlib>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "tactile/error.h"
#include "tactile/hashing.h"

namespace tactile::editing {

namespace {

std::vector<std::byte> base64_decode(std::string_view text) {
  std::string clean;
  clean.reserve(text.size());
  for (char c : text) {
    if (c != '\n' && c != '\r' && c != ' ') clean.push_back(c);
  }
  if (clean.empty() || clean.size() % 4 != 0) {
    throw Error(ErrorCode::kBackend, "malformed base64 image payload");
  }
  std::vector<std::byte> out(clean.size() / 4 * 3);
  const int n = EVP_DecodeBlock(reinterpret_cast<unsigned char*>(out.data()),
                                reinterpret_cast<const unsigned char*>(clean.data()),
                                static_cast<int>(clean.size()));
  if (n < 0) throw Error(ErrorCode::kBackend, "malformed base64 image payload");
  std::size_t pad = 0;
  if (clean.back() == '=') ++pad;
  if (clean[clean.size() - 2] == '=') ++pad;
  out.resize(static_cast<std::size_t>(n) - pad);
  return out;
}

}  // namespace

EditResponse MockBackend::edit(const EditRequest& request) {
  ++calls_;
  if (failures_left_ > 0) {
    --failures_left_;
    throw Error(ErrorCode::kTransient, "mock backend: simulated transient failure");
  }
  if (request.image_png.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "edit request without image");
  }
  const std::string digest = to_hex(sha256(request.prompt));
  nlohmann::ordered_json meta;
  meta["backend"] = "mock";
  meta["prompt_sha256"] = digest;
  meta["output_size"] = request.output_size;
  return {request.image_png, "mock-" + digest.substr(0, 16), meta.dump()};
}

HttpBackend::HttpBackend(HttpBackendConfig config) : config_(std::move(config)) {
  if (const char* key = std::getenv(config_.api_key_env.c_str())) api_key_ = key;
}

EditResponse HttpBackend::edit(const EditRequest& request) {
  if (api_key_.empty()) {
    throw Error(ErrorCode::kAuth,
                "no credentials: set " + config_.api_key_env);
  }
  httplib::Client client(config_.base_url);
  client.set_connection_timeout(config_.timeout);
  client.set_read_timeout(config_.timeout);
  client.set_write_timeout(config_.timeout);
  client.set_bearer_token_auth(api_key_);

  const std::string size =
      std::to_string(request.output_size) + "x" + std::to_string(request.output_size);
  httplib::MultipartFormDataItems items = {
      {"model", config_.model, "", ""},
      {"prompt", request.prompt, "", ""},
      {"size", size, "", ""},
      {"n", "1", "", ""},
      {"image",
       std::string(reinterpret_cast<const char*>(request.image_png.data()),
                   request.image_png.size()),
       "image.png", "image/png"},
  };
  httplib::Result res = client.Post(config_.path, items);
  if (!res) {
    throw Error(ErrorCode::kTransient,
                "edit request failed: " + httplib::to_string(res.error()));
  }
  const int status = res->status;
  if (status == 401 || status == 403) {
    throw Error(ErrorCode::kAuth, "edit backend rejected credentials (HTTP " +
                                      std::to_string(status) + ")");
  }
  if (status == 429) {
    throw Error(ErrorCode::kRateLimited, "edit backend rate limit (HTTP 429)");
  }
  if (status >= 500) {
    throw Error(ErrorCode::kTransient,
                "edit backend HTTP " + std::to_string(status));
  }
  if (status != 200) {
    throw Error(ErrorCode::kBackend, "edit backend HTTP " + std::to_string(status) +
                                         ": " + res->body.substr(0, 512));
  }

  nlohmann::json body;
  try {
    body = nlohmann::json::parse(res->body);
  } catch (const nlohmann::json::parse_error&) {
    throw Error(ErrorCode::kBackend, "edit backend returned non-JSON body");
  }
  if (!body.contains("data") || !body["data"].is_array() || body["data"].empty() ||
      !body["data"][0].contains("b64_json") ||
      !body["data"][0]["b64_json"].is_string()) {
    throw Error(ErrorCode::kBackend, "edit backend response has no image");
  }
  EditResponse out;
  out.image_png = base64_decode(body["data"][0]["b64_json"].get<std::string>());
  out.request_id = res->get_header_value("x-request-id");
  for (auto& item : body["data"]) item["b64_json"] = "<elided>";
  out.raw_metadata = body.dump();
  return out;
}

SubmitResult submit_edit(EditBackend& backend, const EditRequest& request,
                         const RetryPolicy& policy) {
  if (policy.max_attempts < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_attempts must be >= 1");
  }
  auto sleep = policy.sleep ? policy.sleep : [](std::chrono::milliseconds d) {
    std::this_thread::sleep_for(d);
  };
  for (int attempt = 1;; ++attempt) {
    try {
      return {backend.edit(request), attempt};
    } catch (const Error& e) {
      const bool retryable = e.code() == ErrorCode::kTransient ||
                             e.code() == ErrorCode::kRateLimited;
      if (!retryable || attempt >= policy.max_attempts) {
        if (retryable) {
          throw Error(e.code(), std::string(e.what()) + " (after " +
                                    std::to_string(attempt) + " attempts)");
        }
        throw;
      }
      const double factor = std::pow(policy.multiplier, attempt - 1);
      sleep(std::chrono::milliseconds(
          static_cast<long long>(policy.base_delay.count() * factor)));
    }
  }
}

}  // namespace tactile::editing
