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

#include "tactile/editing/pipeline.h"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "json.hpp"
#include "tactile/editing/pad.h"
#include "tactile/error.h"
#include "tactile/hashing.h"
#include "tactile/io/files.h"
#include "tactile/io/image.h"
#include "tactile/io/text.h"

namespace tactile::editing {

std::vector<IssueScore> score_pair(EditContext& ctx, std::string_view pair_id,
                                   corpus::TaskCode task) {
  return score_issues(ctx.registry, task, ctx.checkpoints,
                      [&](const corpus::OptionDef& o) {
                        return ctx.features.features(pair_id, task, o.id);
                      });
}

double score_tactile(EditContext& ctx, std::string_view pair_id,
                     corpus::TaskCode task, const corpus::OptionDef& option,
                     std::span<const std::byte> tactile_png) {
  const embedding::FeatureVector f =
      ctx.features.features_with_tactile(pair_id, tactile_png, task, option.id);
  return score_option(option, ctx.checkpoints, f);
}

Rescore rescore(EditContext& ctx, std::string_view pair_id,
                corpus::TaskCode task, const corpus::OptionDef& option,
                std::span<const std::byte> padded_original_png,
                std::span<const std::byte> edited_png) {
  const double before =
      score_tactile(ctx, pair_id, task, option, padded_original_png);
  const double after = score_tactile(ctx, pair_id, task, option, edited_png);
  return make_rescore(before, after);
}

EditOutcome run_edit(EditContext& ctx, std::string_view pair_id,
                     corpus::TaskCode task) {
  const std::vector<IssueScore> scores = score_pair(ctx, pair_id, task);
  const IssueScore& top = select_top_issue(scores);
  return run_edit_for_option(ctx, pair_id, task,
                             ctx.registry.option(task, top.option_id));
}

EditOutcome run_edit_for_option(EditContext& ctx, std::string_view pair_id,
                                corpus::TaskCode task,
                                const corpus::OptionDef& option) {
  if (!option.actionable || option.polarity == corpus::Polarity::kPass) {
    throw Error(ErrorCode::kInvalidArgument,
                "option " + option.id + " is not an actionable defect");
  }
  if (option.task != task) {
    throw Error(ErrorCode::kInvalidArgument,
                "option " + option.id + " does not belong to " + task.str());
  }
  const corpus::ImagePair& pair = ctx.pairs.at(pair_id);

  EditJob job;
  job.pair_id = pair.pair_id;
  job.task = task.str();
  job.option_id = option.id;
  job.template_key = option.template_key;
  job.prompt = build_prompt(task.family, option.template_key, ctx.templates);
  job.prompt_sha256 = to_hex(sha256(job.prompt));
  job.started_at = ctx.clock();

  const std::vector<std::byte> original = io::read_bytes(pair.tactile_ref);
  const io::Image image = io::decode_png(original);
  const PaddedImage padded = pad_square(image);
  const std::vector<std::byte> padded_png = io::encode_png(padded.image);
  job.original_width = image.width;
  job.original_height = image.height;
  job.padded_size = padded.image.width;
  job.offset_x = padded.offset_x;
  job.offset_y = padded.offset_y;

  SubmitResult submitted = submit_edit(
      ctx.backend, {padded_png, job.prompt, ctx.output_size}, ctx.retry);
  job.backend_id = ctx.backend.id();
  job.request_id = submitted.response.request_id;
  job.attempts = submitted.attempts;
  job.backend_response = submitted.response.raw_metadata;
  try {
    io::decode_png(submitted.response.image_png);
  } catch (const Error& e) {
    throw Error(ErrorCode::kBackend,
                std::string("edit backend returned an undecodable image: ") +
                    e.what());
  }

  const Rescore r = rescore(ctx, pair_id, task, option, padded_png,
                            submitted.response.image_png);
  job.p_before = r.p_before;
  job.p_after = r.p_after;
  job.delta = r.delta;
  job.finished_at = ctx.clock();

  std::filesystem::path dir =
      write_job(ctx.jobs_root, job, submitted.response.image_png);
  return {std::move(job), std::move(dir)};
}

std::vector<StudyCandidate> select_study_candidates(
    std::span<const corpus::BinaryRecord> records,
    std::span<const double> probabilities, const corpus::Registry& registry,
    const StudyConfig& config) {
  if (records.size() != probabilities.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "select_study_candidates: records and probabilities differ in "
                "length");
  }
  std::vector<StudyCandidate> out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const corpus::BinaryRecord& r = records[i];
    if (r.split != corpus::Split::kTest) continue;
    const corpus::OptionDef& o = registry.option(r.task, r.option_id);
    if (!o.actionable || o.polarity != corpus::Polarity::kDefect) continue;
    if (r.votes_for < config.min_votes) continue;
    if (!(probabilities[i] >= config.min_probability)) continue;
    out.push_back({&r, probabilities[i]});
  }
  std::sort(out.begin(), out.end(),
            [](const StudyCandidate& a, const StudyCandidate& b) {
              if (a.issue_probability != b.issue_probability) {
                return a.issue_probability > b.issue_probability;
              }
              return std::tie(a.record->pair_id, a.record->task,
                              a.record->option_id) <
                     std::tie(b.record->pair_id, b.record->task,
                              b.record->option_id);
            });
  if (out.size() > config.n) out.resize(config.n);
  return out;
}

double mean(std::span<const double> values) {
  if (values.empty()) return 0.0;
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

double median(std::span<const double> values) {
  if (values.empty()) return 0.0;
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 == 1 ? v[m] : (v[m - 1] + v[m]) / 2.0;
}

void summarize(StudyReport& report) {
  std::vector<double> deltas;
  report.improved = 0;
  for (const StudyEntry& e : report.entries) {
    deltas.push_back(e.delta);
    if (e.delta > 0.0) ++report.improved;
  }
  report.mean_delta = mean(deltas);
  report.median_delta = median(deltas);
  report.short_of_target = report.entries.size() < report.requested;
}

StudyReport batch_edit_study(EditContext& ctx,
                             std::span<const corpus::BinaryRecord> records,
                             const StudyConfig& config) {
  std::vector<double> probabilities(records.size(), 0.0);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const corpus::BinaryRecord& r = records[i];
    if (r.split != corpus::Split::kTest || r.votes_for < config.min_votes) {
      continue;
    }
    const corpus::OptionDef& o = ctx.registry.option(r.task, r.option_id);
    if (!o.actionable || o.polarity != corpus::Polarity::kDefect) continue;
    probabilities[i] = score_option(
        o, ctx.checkpoints, ctx.features.features(r.pair_id, r.task, r.option_id));
  }
  StudyReport report;
  report.requested = config.n;
  for (const StudyCandidate& c :
       select_study_candidates(records, probabilities, ctx.registry, config)) {
    const corpus::BinaryRecord& r = *c.record;
    const EditOutcome out = run_edit_for_option(
        ctx, r.pair_id, r.task, ctx.registry.option(r.task, r.option_id));
    report.entries.push_back({r.pair_id, r.task.str(), r.option_id,
                              c.issue_probability, out.job.p_before,
                              out.job.p_after, out.job.delta});
  }
  summarize(report);
  return report;
}

std::string serialize_study(const StudyReport& report) {
  nlohmann::ordered_json j;
  j["requested"] = report.requested;
  j["selected"] = report.entries.size();
  j["short_of_target"] = report.short_of_target;
  j["improved"] = report.improved;
  j["mean_delta"] = report.mean_delta;
  j["median_delta"] = report.median_delta;
  j["entries"] = nlohmann::ordered_json::array();
  for (const StudyEntry& e : report.entries) {
    nlohmann::ordered_json row;
    row["pair_id"] = e.pair_id;
    row["task"] = e.task;
    row["option_id"] = e.option_id;
    row["selection_probability"] = e.selection_probability;
    row["p_before"] = e.p_before;
    row["p_after"] = e.p_after;
    row["delta"] = e.delta;
    j["entries"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

std::string study_deltas_csv(const StudyReport& report) {
  std::string out =
      "pair_id,task,option_id,selection_probability,p_before,p_after,delta\n";
  for (const StudyEntry& e : report.entries) {
    out += e.pair_id + "," + e.task + "," + e.option_id + "," +
           io::format_double(e.selection_probability) + "," +
           io::format_double(e.p_before) + "," + io::format_double(e.p_after) +
           "," + io::format_double(e.delta) + "\n";
  }
  return out;
}

}  // namespace tactile::editing
