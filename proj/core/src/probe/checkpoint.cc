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

#include <cstring>

#include "tactile/error.h"
#include "tactile/io/binary.h"
#include "tactile/io/files.h"
#include "tactile/probe/train.h"

namespace tactile::probe {

namespace {
constexpr std::string_view kMagic = "TPRB";
}

std::vector<std::byte> serialize_checkpoint(const ProbeCheckpoint& c) {
  const MlpParams& p = c.params;
  io::BinaryWriter w;
  w.put_magic(kMagic);
  w.put_u32(kCheckpointVersion);
  w.put_string(c.task);
  w.put_string(c.option_id);
  w.put_u32(static_cast<std::uint32_t>(p.input_dim()));
  w.put_u32(static_cast<std::uint32_t>(p.hidden_dim()));
  w.put_u32(kOutputDim);
  w.put_string(c.provider_id);

  const TrainConfig& cfg = c.config;
  w.put_f64(cfg.learning_rate);
  w.put_u32(static_cast<std::uint32_t>(cfg.batch_size));
  w.put_u32(static_cast<std::uint32_t>(cfg.epochs));
  w.put_u64(cfg.seed);
  w.put_f64(cfg.weight_decay);
  w.put_f64(cfg.beta1);
  w.put_f64(cfg.beta2);
  w.put_f64(cfg.epsilon);
  w.put_u32(static_cast<std::uint32_t>(cfg.min_records));
  w.put_u32(static_cast<std::uint32_t>(c.best_epoch));
  w.put_f64(c.val_accuracy_at_best);
  w.put_u8(c.selected_on_train ? 1 : 0);

  w.put_f32_block(std::span(p.w1.data(), static_cast<std::size_t>(p.w1.size())));
  w.put_f32_block(std::span(p.b1.data(), static_cast<std::size_t>(p.b1.size())));
  w.put_f32_block(std::span(p.w2.data(), static_cast<std::size_t>(p.w2.size())));
  w.put_f32(p.b2);

  if (c.val_loss.size() != c.train_loss.size() ||
      c.val_accuracy.size() != c.train_loss.size()) {
    throw Error(ErrorCode::kInvariant, "checkpoint epoch series differ in length");
  }
  w.put_u32(static_cast<std::uint32_t>(c.train_loss.size()));
  w.put_f64_block(c.train_loss);
  w.put_f64_block(c.val_loss);
  w.put_f64_block(c.val_accuracy);
  w.seal_with_checksum();
  return w.bytes();
}

ProbeCheckpoint parse_checkpoint(std::span<const std::byte> bytes,
                                 int expected_input) {
  io::BinaryReader r = io::BinaryReader::checked(bytes);
  r.expect_magic(kMagic);
  std::uint32_t version = r.get_u32();
  if (version != kCheckpointVersion) {
    throw Error(ErrorCode::kVersionMismatch,
                "checkpoint version " + std::to_string(version));
  }
  ProbeCheckpoint c;
  c.task = r.get_string();
  c.option_id = r.get_string();
  const std::uint32_t input = r.get_u32();
  const std::uint32_t hidden = r.get_u32();
  const std::uint32_t output = r.get_u32();
  if (static_cast<int>(input) != expected_input ||
      hidden != static_cast<std::uint32_t>(kHiddenDim) || output != kOutputDim) {
    throw Error(ErrorCode::kDimensionMismatch,
                "checkpoint dims (" + std::to_string(input) + ", " +
                    std::to_string(hidden) + ", " + std::to_string(output) +
                    "), expected (" + std::to_string(expected_input) +
                    ", 512, 1)");
  }
  c.provider_id = r.get_string();

  TrainConfig& cfg = c.config;
  cfg.learning_rate = r.get_f64();
  cfg.batch_size = static_cast<int>(r.get_u32());
  cfg.epochs = static_cast<int>(r.get_u32());
  cfg.seed = r.get_u64();
  cfg.weight_decay = r.get_f64();
  cfg.beta1 = r.get_f64();
  cfg.beta2 = r.get_f64();
  cfg.epsilon = r.get_f64();
  cfg.min_records = static_cast<int>(r.get_u32());
  c.best_epoch = static_cast<int>(r.get_u32());
  c.val_accuracy_at_best = r.get_f64();
  c.selected_on_train = r.get_u8() != 0;

  c.params = MlpParams::zeros(static_cast<int>(input), static_cast<int>(hidden));
  MlpParams& p = c.params;
  r.get_f32_block(std::span(p.w1.data(), static_cast<std::size_t>(p.w1.size())));
  r.get_f32_block(std::span(p.b1.data(), static_cast<std::size_t>(p.b1.size())));
  r.get_f32_block(std::span(p.w2.data(), static_cast<std::size_t>(p.w2.size())));
  p.b2 = r.get_f32();

  const std::uint32_t epochs = r.get_u32();
  if (static_cast<std::size_t>(epochs) * 24 != r.remaining()) {
    throw Error(ErrorCode::kCorrupt, "checkpoint epoch series has wrong length");
  }
  c.train_loss.resize(epochs);
  c.val_loss.resize(epochs);
  c.val_accuracy.resize(epochs);
  r.get_f64_block(c.train_loss);
  r.get_f64_block(c.val_loss);
  r.get_f64_block(c.val_accuracy);
  if (!p.all_finite()) {
    throw Error(ErrorCode::kCorrupt, "checkpoint holds non-finite parameters");
  }
  return c;
}

void save_checkpoint(const ProbeCheckpoint& ckpt,
                     const std::filesystem::path& path) {
  io::write_bytes_atomic(path, serialize_checkpoint(ckpt));
}

ProbeCheckpoint load_checkpoint(const std::filesystem::path& path,
                                int expected_input) {
  return parse_checkpoint(io::read_bytes(path), expected_input);
}

}  // namespace tactile::probe
