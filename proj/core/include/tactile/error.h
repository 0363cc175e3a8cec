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

#ifndef TACTILE_ERROR_H_
#define TACTILE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace tactile {

// Stable, machine-readable error categories. The CLI prints these verbatim.
enum class ErrorCode {
  kIo,
  kMalformed,
  kDuplicate,
  kUnknownReference,
  kInvariant,
  kDimensionMismatch,
  kCorrupt,
  kVersionMismatch,
  kDegenerateData,
  kInsufficientData,
  kNormalization,
  kProviderUnavailable,
  kUndecodableImage,
  kAuth,
  kTransient,
  kRateLimited,
  kBackend,
  kAlreadyExists,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tactile

#endif  // TACTILE_ERROR_H_
