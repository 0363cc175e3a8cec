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

#ifndef TACTILE_EMBEDDING_EMBEDDING_H_
#define TACTILE_EMBEDDING_EMBEDDING_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tactile/corpus/taxonomy.h"
#include "tactile/hashing.h"

namespace tactile::embedding {

inline constexpr std::size_t kEmbeddingDim = 768;
// [natural | tactile | natural - tactile | option text]
inline constexpr std::size_t kFeatureDim = 4 * kEmbeddingDim;

inline constexpr double kUnitNormTolerance = 1e-6;

enum class Modality : std::uint8_t { kImage = 0, kText = 1 };

std::string_view modality_name(Modality m);

struct Embedding {
  std::array<float, kEmbeddingDim> values{};
  Modality modality = Modality::kImage;
  Digest source_hash{};

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

// input / ||input||_2, computed in double. Throws Error(kNormalization) for a
// zero or non-finite vector.
std::vector<double> normalize(std::span<const double> v);

// Normalizes a raw 768-vector into an Embedding. Throws
// Error(kDimensionMismatch) on any other length.
Embedding make_embedding(std::span<const double> raw, Modality modality,
                         const Digest& source_hash);

double l2_norm(std::span<const float> v);

// Throws Error(kNormalization) if the norm is outside 1 +/- 1e-6.
void check_unit(const Embedding& e);

// "Task <task> option <option_id>: <description>" with no trailing spaces.
std::string option_prompt(corpus::TaskCode task, const corpus::OptionDef& option);

struct FeatureVector {
  std::array<float, kFeatureDim> values{};

  std::span<const float> natural() const { return block(0); }
  std::span<const float> tactile() const { return block(1); }
  std::span<const float> difference() const { return block(2); }
  std::span<const float> text() const { return block(3); }

  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;

 private:
  std::span<const float> block(std::size_t i) const {
    return std::span<const float>(values).subspan(i * kEmbeddingDim,
                                                  kEmbeddingDim);
  }
};

// The difference block is natural - tactile in float and is not re-normalized.
FeatureVector assemble_features(const Embedding& natural,
                                const Embedding& tactile,
                                const Embedding& text);

}  // namespace tactile::embedding

#endif  // TACTILE_EMBEDDING_EMBEDDING_H_
