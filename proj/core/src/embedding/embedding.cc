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

#include "tactile/embedding/embedding.h"

#include <cmath>

#include "tactile/error.h"

namespace tactile::embedding {

std::string_view modality_name(Modality m) {
  return m == Modality::kText ? "text" : "image";
}

std::vector<double> normalize(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) {
    if (!std::isfinite(x)) {
      throw Error(ErrorCode::kNormalization, "non-finite component");
    }
    sum += x * x;
  }
  if (sum == 0.0) {
    throw Error(ErrorCode::kNormalization, "cannot normalize a zero vector");
  }
  double norm = std::sqrt(sum);
  std::vector<double> out(v.begin(), v.end());
  for (double& x : out) x /= norm;
  return out;
}

Embedding make_embedding(std::span<const double> raw, Modality modality,
                         const Digest& source_hash) {
  if (raw.size() != kEmbeddingDim) {
    throw Error(ErrorCode::kDimensionMismatch,
                "embedding must have 768 components, got " +
                    std::to_string(raw.size()));
  }
  std::vector<double> unit = normalize(raw);
  Embedding e;
  e.modality = modality;
  e.source_hash = source_hash;
  for (std::size_t i = 0; i < kEmbeddingDim; ++i) {
    e.values[i] = static_cast<float>(unit[i]);
  }
  return e;
}

double l2_norm(std::span<const float> v) {
  double sum = 0.0;
  for (float x : v) sum += static_cast<double>(x) * x;
  return std::sqrt(sum);
}

void check_unit(const Embedding& e) {
  double n = l2_norm(e.values);
  if (!(std::fabs(n - 1.0) <= kUnitNormTolerance)) {
    throw Error(ErrorCode::kNormalization,
                "embedding is not unit norm (" + std::to_string(n) + ")");
  }
}

std::string option_prompt(corpus::TaskCode task,
                          const corpus::OptionDef& option) {
  std::string_view desc = option.description;
  while (!desc.empty() && (desc.back() == ' ' || desc.back() == '\t' ||
                           desc.back() == '\n' || desc.back() == '\r')) {
    desc.remove_suffix(1);
  }
  // The separator is part of the template, so an empty description still
  // ends in ": ".
  return "Task " + task.str() + " option " + option.id + ": " +
         std::string(desc);
}

FeatureVector assemble_features(const Embedding& natural,
                                const Embedding& tactile,
                                const Embedding& text) {
  if (natural.modality != Modality::kImage ||
      tactile.modality != Modality::kImage || text.modality != Modality::kText) {
    throw Error(ErrorCode::kInvalidArgument,
                "assemble_features expects (image, image, text) embeddings");
  }
  FeatureVector f;
  float* out = f.values.data();
  for (std::size_t i = 0; i < kEmbeddingDim; ++i) {
    out[i] = natural.values[i];
    out[kEmbeddingDim + i] = tactile.values[i];
    out[2 * kEmbeddingDim + i] = natural.values[i] - tactile.values[i];
    out[3 * kEmbeddingDim + i] = text.values[i];
  }
  return f;
}

}  // namespace tactile::embedding
