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

#include "tactile/error.h"

namespace tactile {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo: return "io";
    case ErrorCode::kMalformed: return "malformed";
    case ErrorCode::kDuplicate: return "duplicate";
    case ErrorCode::kUnknownReference: return "unknown_reference";
    case ErrorCode::kInvariant: return "invariant";
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kCorrupt: return "corrupt";
    case ErrorCode::kVersionMismatch: return "version_mismatch";
    case ErrorCode::kDegenerateData: return "degenerate_data";
    case ErrorCode::kInsufficientData: return "insufficient_data";
    case ErrorCode::kNormalization: return "normalization";
    case ErrorCode::kProviderUnavailable: return "provider_unavailable";
    case ErrorCode::kUndecodableImage: return "undecodable_image";
    case ErrorCode::kAuth: return "auth";
    case ErrorCode::kTransient: return "transient";
    case ErrorCode::kRateLimited: return "rate_limited";
    case ErrorCode::kBackend: return "backend";
    case ErrorCode::kAlreadyExists: return "already_exists";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
  }
  return "unknown";
}

}  // namespace tactile
