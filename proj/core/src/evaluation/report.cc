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

#include "tactile/evaluation/report.h"

#include <algorithm>
#include <memory>

#include "tactile/error.h"
#include "tactile/io/files.h"
#include "tactile/io/text.h"

namespace tactile::evaluation {

namespace fs = std::filesystem;

std::map<std::string, double> EvalReport::family_task_macro() const {
  std::map<std::string, std::pair<double, int>> acc;
  for (const auto& [task, t] : per_task) {
    auto& [sum, n] = acc[task.substr(0, 2)];
    sum += t.accuracy();
    ++n;
  }
  std::map<std::string, double> out;
  for (const auto& [fam, sn] : acc) out[fam] = sn.first / sn.second;
  return out;
}

EvalReport tally_predictions(std::span<const corpus::BinaryRecord> records,
                             std::span<const bool> predicted) {
  if (records.size() != predicted.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "one prediction per record is required");
  }
  EvalReport report;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const corpus::BinaryRecord& r = records[i];
    const bool hit = predicted[i] == r.label;
    const std::string task = r.task.str();
    report.per_option[{task, r.option_id}].add(hit);
    report.per_task[task].add(hit);
    report.per_family[std::string(corpus::family_code(r.task.family))].add(hit);
    report.overall.add(hit);
  }
  return report;
}

std::vector<bool> predict_records(
    const probe::CheckpointSet& checkpoints,
    std::span<const corpus::BinaryRecord> records,
    std::span<const embedding::FeatureVector> features) {
  if (records.size() != features.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "one feature vector per record is required");
  }
  std::map<OptionKey, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < records.size(); ++i) {
    groups[{records[i].task.str(), records[i].option_id}].push_back(i);
  }
  std::vector<bool> out(records.size(), false);
  for (const auto& [key, idx] : groups) {
    const probe::ProbeCheckpoint& ckpt = checkpoints.at(key.first, key.second);
    probe::RowMatrix<float> x(static_cast<Eigen::Index>(idx.size()),
                              static_cast<Eigen::Index>(embedding::kFeatureDim));
    for (std::size_t r = 0; r < idx.size(); ++r) {
      const auto& v = features[idx[r]].values;
      for (std::size_t c = 0; c < v.size(); ++c) {
        x(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v[c];
      }
    }
    probe::Vector<float> logits = probe::forward_batch(ckpt.params, x);
    for (std::size_t r = 0; r < idx.size(); ++r) {
      out[idx[r]] = probe::predict_label(logits[static_cast<Eigen::Index>(r)]);
    }
  }
  return out;
}

EvalReport evaluate(const probe::CheckpointSet& checkpoints,
                    std::span<const corpus::BinaryRecord> records,
                    std::span<const embedding::FeatureVector> features) {
  std::vector<bool> predicted = predict_records(checkpoints, records, features);
  // vector<bool> is not contiguous.
  std::unique_ptr<bool[]> flags(new bool[predicted.size()]);
  std::copy(predicted.begin(), predicted.end(), flags.get());
  return tally_predictions(records,
                           std::span<const bool>(flags.get(), predicted.size()));
}

namespace {

std::vector<Ranked> descending(const std::map<std::string, Tally>& tallies) {
  std::vector<Ranked> out;
  for (const auto& [k, t] : tallies) out.push_back({k, t.accuracy(), t.total});
  std::stable_sort(out.begin(), out.end(), [](const Ranked& a, const Ranked& b) {
    if (a.accuracy != b.accuracy) return a.accuracy > b.accuracy;
    return a.key < b.key;
  });
  return out;
}

std::string acc_text(const Tally& t) { return io::format_fixed(t.accuracy(), 6); }

}  // namespace

std::vector<Ranked> difficulty_ordering(const EvalReport& report) {
  return descending(report.per_task);
}

std::vector<Ranked> family_ordering(const EvalReport& report) {
  return descending(report.per_family);
}

std::vector<Ranked> bottom_k_options(const EvalReport& report, std::size_t k) {
  std::vector<Ranked> out;
  for (const auto& [key, t] : report.per_option) {
    out.push_back({key.first + "/" + key.second, t.accuracy(), t.total});
  }
  std::stable_sort(out.begin(), out.end(), [](const Ranked& a, const Ranked& b) {
    if (a.accuracy != b.accuracy) return a.accuracy < b.accuracy;
    return a.key < b.key;
  });
  if (out.size() > k) out.resize(k);
  return out;
}

void export_report(const EvalReport& report, const fs::path& dir) {
  std::string opt = "task,option_id,correct,total,accuracy\n";
  for (const auto& [key, t] : report.per_option) {
    opt += key.first + "," + key.second + "," + std::to_string(t.correct) + "," +
           std::to_string(t.total) + "," + acc_text(t) + "\n";
  }
  std::string task = "task,correct,total,accuracy\n";
  for (const auto& [k, t] : report.per_task) {
    task += k + "," + std::to_string(t.correct) + "," + std::to_string(t.total) +
            "," + acc_text(t) + "\n";
  }
  auto macro = report.family_task_macro();
  std::string fam = "family,correct,total,accuracy,task_macro_accuracy\n";
  for (const auto& [k, t] : report.per_family) {
    fam += k + "," + std::to_string(t.correct) + "," + std::to_string(t.total) +
           "," + acc_text(t) + "," + io::format_fixed(macro[k], 6) + "\n";
  }
  std::string summary = "metric,value\n";
  summary += "correct," + std::to_string(report.overall.correct) + "\n";
  summary += "total," + std::to_string(report.overall.total) + "\n";
  summary += "accuracy," + acc_text(report.overall) + "\n";

  io::write_text_atomic(dir / "per_option.csv", opt);
  io::write_text_atomic(dir / "per_task.csv", task);
  io::write_text_atomic(dir / "per_family.csv", fam);
  io::write_text_atomic(dir / "summary.csv", summary);
}

namespace {

std::vector<std::vector<std::string>> read_table(const fs::path& path,
                                                 std::size_t columns) {
  auto lines = io::split_lines(io::read_text(path));
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    auto f = io::split_row(lines[i]);
    if (f.size() != columns) {
      throw Error(ErrorCode::kMalformed,
                  path.string() + " line " + std::to_string(i + 1) +
                      ": expected " + std::to_string(columns) + " columns");
    }
    rows.push_back(std::move(f));
  }
  return rows;
}

Tally to_tally(const std::string& correct, const std::string& total) {
  try {
    return Tally{std::stoull(correct), std::stoull(total)};
  } catch (const std::exception&) {
    throw Error(ErrorCode::kMalformed, "bad count in report table");
  }
}

}  // namespace

EvalReport load_report(const fs::path& dir) {
  EvalReport report;
  for (auto& f : read_table(dir / "per_option.csv", 5)) {
    report.per_option[{f[0], f[1]}] = to_tally(f[2], f[3]);
  }
  for (auto& f : read_table(dir / "per_task.csv", 4)) {
    report.per_task[f[0]] = to_tally(f[1], f[2]);
  }
  for (auto& f : read_table(dir / "per_family.csv", 5)) {
    report.per_family[f[0]] = to_tally(f[1], f[2]);
  }
  for (const auto& [k, t] : report.per_family) {
    report.overall.correct += t.correct;
    report.overall.total += t.total;
  }
  return report;
}

std::string format_curves(const probe::CheckpointSet& checkpoints) {
  std::string out = "task,option_id,epoch,train_loss,val_loss,val_accuracy\n";
  for (const probe::ProbeCheckpoint* c : checkpoints.all()) {
    for (std::size_t e = 0; e < c->train_loss.size(); ++e) {
      out += c->task + "," + c->option_id + "," + std::to_string(e + 1) + "," +
             io::format_double(c->train_loss[e]) + "," +
             io::format_double(c->val_loss[e]) + "," +
             io::format_double(c->val_accuracy[e]) + "\n";
    }
  }
  return out;
}

void export_curves(const probe::CheckpointSet& checkpoints,
                   const fs::path& path) {
  io::write_text_atomic(path, format_curves(checkpoints));
}

}  // namespace tactile::evaluation
