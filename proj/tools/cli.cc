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

#include "cli.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "tactile/aggregation/aggregate.h"
#include "tactile/aggregation/ballots.h"
#include "tactile/corpus/pairs.h"
#include "tactile/corpus/records.h"
#include "tactile/corpus/taxonomy.h"
#include "tactile/editing/backend.h"
#include "tactile/editing/pad.h"
#include "tactile/editing/pipeline.h"
#include "tactile/editing/templates.h"
#include "tactile/embedding/cache.h"
#include "tactile/embedding/features.h"
#include "tactile/embedding/provider.h"
#include "tactile/error.h"
#include "tactile/evaluation/report.h"
#include "tactile/hashing.h"
#include "tactile/io/files.h"
#include "tactile/io/image.h"
#include "tactile/io/text.h"
#include "tactile/probe/checkpoint_set.h"
#include "tactile/probe/train.h"

#ifndef TACTILE_VERSION
#define TACTILE_VERSION "0.0.0"
#endif

namespace tactile::tools {

namespace fs = std::filesystem;

namespace {

// Every key accepted in a config file; each is also a --flag.
const std::vector<std::pair<std::string, std::string>> kConfigKeys = {
    {"registry", "Option registry (JSON)"},
    {"templates", "Repair template registry (JSON)"},
    {"pairs", "Image pair manifest (CSV)"},
    {"ballots", "Crowd ballots export (CSV)"},
    {"gold", "Gold key (CSV)"},
    {"records", "Binary records file (JSONL)"},
    {"store", "Embedding store file"},
    {"checkpoints", "Checkpoint directory"},
    {"jobs-dir", "Edit job directory"},
    {"reports", "Report output directory"},
    {"provider", "Embedding provider: fixture | store"},
    {"backend", "Edit backend: mock | http"},
    {"clock", "Job timestamps: fixed | system (default: fixed for mock)"},
    {"seed", "Seed for every random stream"},
    {"jobs", "Worker cap"},
    {"threshold-mode", "majority_votes | raw_fraction"},
    {"gold-pass-fraction", "Fraction of gold answers that must match"},
    {"promote-min", "Identical ballots needed for promotion"},
    {"min-support", "Kept ballots needed per (pair, task)"},
    {"lr", "AdamW learning rate"},
    {"batch-size", "Mini-batch size"},
    {"epochs", "Training epochs"},
    {"weight-decay", "AdamW weight decay"},
    {"min-records", "Minimum training rows per option"},
    {"output-size", "Edit output side length in pixels"},
    {"api-base-url", "HTTP edit endpoint base URL"},
    {"api-path", "HTTP edit endpoint path"},
    {"model", "HTTP edit model name"},
};

struct RunConfig {
  fs::path registry, templates, pairs, ballots, gold, records, store,
      checkpoints, jobs_dir, reports;
  std::string provider = "fixture";
  std::string backend = "mock";
  std::string clock;
  std::uint64_t seed = 0;
  int jobs = 1;
  int output_size = 1024;
  aggregation::BuildOptions build;
  probe::TrainConfig train;
  editing::HttpBackendConfig http;
};

[[noreturn]] void bad_config(const std::string& message) {
  throw Error(ErrorCode::kInvalidArgument, message);
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const char* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    bad_config("invalid value for " + key + ": '" + value + "'");
  }
  return out;
}

std::string normalize_key(std::string key) {
  std::replace(key.begin(), key.end(), '_', '-');
  return key;
}

bool known_key(const std::string& key) {
  return std::any_of(kConfigKeys.begin(), kConfigKeys.end(),
                     [&](const auto& kv) { return kv.first == key; });
}

// Flat `key = value` lines; '#' starts a comment. Relative paths resolve
// against the file's directory.
std::map<std::string, std::string> read_config_file(const fs::path& path) {
  std::map<std::string, std::string> out;
  const std::string text = io::read_text(path);
  const fs::path base = path.parent_path();
  int line_no = 0;
  for (std::string_view raw : io::split_lines(text)) {
    ++line_no;
    std::string line(raw);
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = std::string(io::trim(line));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kMalformed, path.string() + ":" +
                                             std::to_string(line_no) +
                                             ": expected key = value");
    }
    std::string key = normalize_key(std::string(io::trim(line.substr(0, eq))));
    std::string value(io::trim(line.substr(eq + 1)));
    if (!known_key(key)) {
      throw Error(ErrorCode::kInvalidArgument,
                  path.string() + ": unknown config key '" + key + "'");
    }
    static const std::set<std::string> kPathKeys = {
        "registry", "templates", "pairs",       "ballots",  "gold",
        "records",  "store",     "checkpoints", "jobs-dir", "reports"};
    if (kPathKeys.contains(key) && !value.empty() && fs::path(value).is_relative()) {
      value = (base / value).lexically_normal().string();
    }
    out[key] = value;
  }
  return out;
}

RunConfig make_config(const std::map<std::string, std::string>& kv) {
  RunConfig c;
  auto get = [&](const char* key) -> const std::string* {
    auto it = kv.find(key);
    return it == kv.end() || it->second.empty() ? nullptr : &it->second;
  };
  auto path = [&](const char* key, fs::path& dst) {
    if (const std::string* v = get(key)) dst = *v;
  };
  path("registry", c.registry);
  path("templates", c.templates);
  path("pairs", c.pairs);
  path("ballots", c.ballots);
  path("gold", c.gold);
  path("records", c.records);
  path("store", c.store);
  path("checkpoints", c.checkpoints);
  path("jobs-dir", c.jobs_dir);
  path("reports", c.reports);
  if (const auto* v = get("provider")) c.provider = *v;
  if (c.provider != "fixture" && c.provider != "store") {
    bad_config("provider must be fixture or store");
  }
  if (const auto* v = get("backend")) c.backend = *v;
  if (c.backend != "mock" && c.backend != "http") {
    bad_config("backend must be mock or http");
  }
  c.clock = c.backend == "mock" ? "fixed" : "system";
  if (const auto* v = get("clock")) c.clock = *v;
  if (c.clock != "fixed" && c.clock != "system") {
    bad_config("clock must be fixed or system");
  }
  if (const auto* v = get("seed")) c.seed = parse_number<std::uint64_t>("seed", *v);
  if (const auto* v = get("jobs")) c.jobs = parse_number<int>("jobs", *v);
  if (c.jobs < 1) bad_config("jobs must be >= 1");
  if (const auto* v = get("output-size")) {
    c.output_size = parse_number<int>("output-size", *v);
  }
  if (const auto* v = get("threshold-mode")) {
    c.build.policy.mode = aggregation::parse_threshold_mode(*v);
  }
  if (const auto* v = get("gold-pass-fraction")) {
    c.build.gold_pass_fraction = parse_number<double>("gold-pass-fraction", *v);
  }
  if (const auto* v = get("promote-min")) {
    c.build.consensus.promote_min = parse_number<int>("promote-min", *v);
  }
  if (const auto* v = get("min-support")) {
    c.build.consensus.min_support = parse_number<int>("min-support", *v);
  }
  c.train.seed = c.seed;
  if (const auto* v = get("lr")) c.train.learning_rate = parse_number<double>("lr", *v);
  if (const auto* v = get("batch-size")) {
    c.train.batch_size = parse_number<int>("batch-size", *v);
  }
  if (const auto* v = get("epochs")) c.train.epochs = parse_number<int>("epochs", *v);
  if (const auto* v = get("weight-decay")) {
    c.train.weight_decay = parse_number<double>("weight-decay", *v);
  }
  if (const auto* v = get("min-records")) {
    c.train.min_records = parse_number<int>("min-records", *v);
  }
  c.train.validate();
  if (const auto* v = get("api-base-url")) c.http.base_url = *v;
  if (const auto* v = get("api-path")) c.http.path = *v;
  if (const auto* v = get("model")) c.http.model = *v;
  return c;
}

// Inputs a stage reads must exist before it starts.
void require_inputs(
    std::initializer_list<std::pair<const char*, const fs::path*>> inputs) {
  for (const auto& [name, path] : inputs) {
    if (path->empty()) {
      bad_config("missing required setting: " + std::string(name));
    }
    if (!fs::exists(*path)) {
      throw Error(ErrorCode::kIo,
                  std::string(name) + " not found: " + path->string());
    }
  }
}

void require_output(const char* name, const fs::path& path) {
  if (path.empty()) bad_config("missing required setting: " + std::string(name));
}

std::string file_digest(const fs::path& path) {
  if (path.empty() || !fs::exists(path)) return "unavailable";
  return to_hex(sha256(io::read_text(path)));
}

std::string fixed(double v) { return io::format_fixed(v, 6); }

std::string escape(std::string_view text) {
  std::string out;
  for (char ch : text) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch == '\n' ? ' ' : ch);
  }
  return out;
}

// Registry, templates, pairs and an embedding cache, loaded lazily.
class Session {
 public:
  explicit Session(RunConfig config) : cfg_(std::move(config)) {}

  const RunConfig& cfg() const { return cfg_; }

  const editing::TemplateRegistry& templates() {
    if (!templates_) {
      require_inputs({{"templates", &cfg_.templates}});
      templates_ = std::make_unique<editing::TemplateRegistry>(
          editing::load_templates(cfg_.templates));
    }
    return *templates_;
  }

  const corpus::Registry& registry() {
    if (!registry_) {
      require_inputs({{"registry", &cfg_.registry}});
      registry_ = std::make_unique<corpus::Registry>(
          corpus::load_registry(cfg_.registry, templates().keys()));
    }
    return *registry_;
  }

  const corpus::PairIndex& pairs() {
    if (!pairs_) {
      require_inputs({{"pairs", &cfg_.pairs}});
      pairs_ = std::make_unique<corpus::PairIndex>(corpus::load_pairs(cfg_.pairs));
    }
    return *pairs_;
  }

  corpus::RecordSet records() {
    require_inputs({{"records", &cfg_.records}});
    return corpus::load_records(cfg_.records, registry());
  }

  embedding::FeatureBuilder& features() {
    if (!features_) {
      if (cfg_.provider == "store") {
        require_inputs({{"store", &cfg_.store}});
        embedding::EmbeddingStore store = embedding::EmbeddingStore::load(cfg_.store);
        provider_ = std::make_unique<embedding::StoreProvider>(store);
        cache_ = std::make_unique<embedding::EmbeddingCache>(*provider_,
                                                             std::move(store));
      } else {
        provider_ = std::make_unique<embedding::FixtureProvider>();
        embedding::EmbeddingStore store =
            cfg_.store.empty()
                ? embedding::EmbeddingStore(provider_->id())
                : embedding::EmbeddingStore::open(cfg_.store, provider_->id());
        cache_ = std::make_unique<embedding::EmbeddingCache>(*provider_,
                                                             std::move(store));
      }
      features_ = std::make_unique<embedding::FeatureBuilder>(registry(), pairs(),
                                                              *cache_);
    }
    return *features_;
  }

  // Persists newly computed embeddings.
  void flush() {
    if (cache_ && cfg_.provider == "fixture" && !cfg_.store.empty() &&
        cache_->provider_calls() > 0) {
      cache_->save(cfg_.store);
    }
  }

  std::size_t provider_calls() const {
    return cache_ ? cache_->provider_calls() : 0;
  }
  std::size_t cached() const { return cache_ ? cache_->snapshot().size() : 0; }

  const probe::CheckpointSet& checkpoints() {
    if (!checkpoints_) {
      require_inputs({{"checkpoints", &cfg_.checkpoints}});
      checkpoints_ = std::make_unique<probe::CheckpointSet>(
          probe::CheckpointSet::load_dir(cfg_.checkpoints));
    }
    return *checkpoints_;
  }

  editing::EditBackend& backend() {
    if (!backend_) {
      if (cfg_.backend == "http") {
        backend_ = std::make_unique<editing::HttpBackend>(cfg_.http);
      } else {
        backend_ = std::make_unique<editing::MockBackend>();
      }
    }
    return *backend_;
  }

  editing::EditContext edit_context() {
    require_output("jobs-dir", cfg_.jobs_dir);
    return editing::EditContext{
        registry(),
        pairs(),
        templates(),
        checkpoints(),
        features(),
        backend(),
        editing::RetryPolicy{},
        cfg_.clock == "fixed" ? editing::fixed_clock()
                              : editing::system_clock_utc(),
        cfg_.jobs_dir,
        cfg_.output_size};
  }

 private:
  RunConfig cfg_;
  std::unique_ptr<editing::TemplateRegistry> templates_;
  std::unique_ptr<corpus::Registry> registry_;
  std::unique_ptr<corpus::PairIndex> pairs_;
  std::unique_ptr<embedding::EmbeddingProvider> provider_;
  std::unique_ptr<embedding::EmbeddingCache> cache_;
  std::unique_ptr<embedding::FeatureBuilder> features_;
  std::unique_ptr<probe::CheckpointSet> checkpoints_;
  std::unique_ptr<editing::EditBackend> backend_;
};

void print_counts(std::ostream& out, const corpus::SplitCounts& c) {
  out << "records=" << c.total() << " train=" << c.train << " val=" << c.val
      << " test=" << c.test << "\n";
}

std::vector<corpus::BinaryRecord> filter_records(
    std::vector<corpus::BinaryRecord> records,
    const std::optional<corpus::TaskCode>& task, const std::string& option,
    const std::optional<corpus::Split>& split) {
  std::erase_if(records, [&](const corpus::BinaryRecord& r) {
    return (task && r.task != *task) || (!option.empty() && r.option_id != option) ||
           (split && r.split != *split);
  });
  return records;
}

probe::Dataset make_dataset(std::span<const corpus::BinaryRecord> records,
                            std::span<const embedding::FeatureVector> features) {
  probe::Dataset d;
  d.x.resize(static_cast<Eigen::Index>(records.size()), embedding::kFeatureDim);
  for (std::size_t i = 0; i < records.size(); ++i) {
    d.x.row(static_cast<Eigen::Index>(i)) =
        Eigen::Map<const Eigen::RowVectorXf>(features[i].values.data(),
                                             embedding::kFeatureDim);
    d.y.push_back(records[i].label ? 1 : 0);
  }
  return d;
}

// ---- subcommands --------------------------------------------------------

void cmd_aggregate(Session& s, std::ostream& out) {
  const RunConfig& c = s.cfg();
  require_inputs({{"ballots", &c.ballots}, {"gold", &c.gold}});
  require_output("records", c.records);
  const corpus::Registry& registry = s.registry();
  std::vector<aggregation::Ballot> ballots = aggregation::load_ballots(c.ballots);
  aggregation::validate_ballots(ballots, registry);
  const aggregation::GoldKey gold = aggregation::load_gold_key(c.gold);
  const aggregation::DatasetBuild build =
      aggregation::build_dataset(ballots, registry, gold, c.build);
  corpus::write_records(build.records, c.records);
  const aggregation::BuildSummary& sum = build.summary;
  out << "ballots=" << sum.ballots << " groups=" << sum.groups
      << " gold_rejected=" << sum.gold_rejected
      << " status_excluded=" << sum.status_excluded
      << " approved_kept=" << sum.approved_kept << " promoted=" << sum.promoted
      << " dropped_options=" << sum.dropped_options << "\n";
  print_counts(out, corpus::count_splits(build.records));
  out << "wrote " << c.records.string() << "\n";
}

void cmd_features(Session& s, std::ostream& out) {
  const corpus::RecordSet set = s.records();
  const std::vector<embedding::FeatureVector> f = s.features().features(set.records);
  s.flush();
  out << "features=" << f.size() << " embeddings=" << s.cached()
      << " provider_calls=" << s.provider_calls() << "\n";
}

struct TrainUnit {
  std::string task;
  std::string option;
  probe::Dataset train;
  probe::Dataset val;
  std::string result;
};

void cmd_train(Session& s, std::ostream& out, const std::string& task_arg,
               const std::string& option_arg) {
  const RunConfig& c = s.cfg();
  require_output("checkpoints", c.checkpoints);
  std::optional<corpus::TaskCode> task;
  if (!task_arg.empty()) task = corpus::TaskCode::parse(task_arg);
  if (!option_arg.empty() && !task) bad_config("--option requires --task");
  if (task && !option_arg.empty()) s.registry().option(*task, option_arg);

  std::vector<corpus::BinaryRecord> records =
      filter_records(s.records().records, task, option_arg, std::nullopt);
  std::erase_if(records, [](const corpus::BinaryRecord& r) {
    return r.split == corpus::Split::kTest;
  });
  if (records.empty()) {
    throw Error(ErrorCode::kInsufficientData, "no train/val records selected");
  }
  const std::vector<embedding::FeatureVector> features =
      s.features().features(records);
  s.flush();

  std::map<std::pair<std::string, std::string>,
           std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
      groups;
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto& g = groups[{records[i].task.str(), records[i].option_id}];
    (records[i].split == corpus::Split::kTrain ? g.first : g.second).push_back(i);
  }
  std::vector<TrainUnit> units;
  for (const auto& [key, idx] : groups) {
    auto pick = [&](const std::vector<std::size_t>& rows) {
      std::vector<corpus::BinaryRecord> r;
      std::vector<embedding::FeatureVector> f;
      for (std::size_t i : rows) {
        r.push_back(records[i]);
        f.push_back(features[i]);
      }
      return make_dataset(r, f);
    };
    units.push_back({key.first, key.second, pick(idx.first), pick(idx.second), {}});
  }

  const std::string pid =
      c.provider == "fixture" ? std::string(embedding::FixtureProvider::kId)
                              : embedding::EmbeddingStore::load(c.store).provider_id();

  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::exception_ptr failure;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < units.size();) {
      TrainUnit& u = units[i];
      try {
        const probe::ProbeCheckpoint ckpt =
            probe::train_option(u.train, u.val, c.train, {u.task, u.option, pid});
        probe::save_checkpoint(ckpt,
                               probe::checkpoint_path(c.checkpoints, u.task, u.option));
        u.result = "trained " + u.task + "/" + u.option +
                   " train=" + std::to_string(u.train.size()) +
                   " val=" + std::to_string(u.val.size()) +
                   " best_epoch=" + std::to_string(ckpt.best_epoch) +
                   " val_accuracy=" + fixed(ckpt.val_accuracy_at_best) +
                   (ckpt.selected_on_train ? " selected_on_train" : "");
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kInsufficientData ||
            e.code() == ErrorCode::kDegenerateData) {
          u.result = "skipped " + u.task + "/" + u.option + " code=" +
                     std::string(error_code_name(e.code())) + " reason=\"" +
                     e.what() + "\"";
        } else {
          std::lock_guard lock(err_mu);
          if (!failure) failure = std::current_exception();
        }
      } catch (...) {
        std::lock_guard lock(err_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int n_threads =
      std::min<int>(c.jobs, static_cast<int>(units.size()));
  std::vector<std::thread> threads;
  for (int t = 1; t < n_threads; ++t) threads.emplace_back(worker);
  worker();
  for (std::thread& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
  for (const TrainUnit& u : units) out << u.result << "\n";
}

void cmd_eval(Session& s, std::ostream& out, const std::string& task_arg,
              const std::string& split_arg) {
  const RunConfig& c = s.cfg();
  require_output("reports", c.reports);
  std::optional<corpus::TaskCode> task;
  if (!task_arg.empty()) task = corpus::TaskCode::parse(task_arg);
  const std::vector<corpus::BinaryRecord> records = filter_records(
      s.records().records, task, "", corpus::parse_split(split_arg));
  if (records.empty()) {
    throw Error(ErrorCode::kInsufficientData, "no records in split " + split_arg);
  }
  const probe::CheckpointSet& ckpts = s.checkpoints();
  const std::vector<embedding::FeatureVector> features =
      s.features().features(records);
  s.flush();
  const evaluation::EvalReport report =
      evaluation::evaluate(ckpts, records, features);
  evaluation::export_report(report, c.reports);
  evaluation::export_curves(ckpts, c.reports / "curves.csv");

  out << "split=" << split_arg << " records=" << report.overall.total
      << " correct=" << report.overall.correct
      << " overall_accuracy=" << fixed(report.overall.accuracy()) << "\n";
  out << "family,accuracy,correct,total\n";
  for (const auto& [family, t] : report.per_family) {
    out << family << "," << fixed(t.accuracy()) << "," << t.correct << ","
        << t.total << "\n";
  }
  out << "wrote " << c.reports.string() << "\n";
}

void cmd_score(Session& s, std::ostream& out, const std::string& pair,
               const std::string& task_arg) {
  editing::EditContext ctx = s.edit_context();
  const std::vector<editing::IssueScore> scores =
      editing::score_pair(ctx, pair, corpus::TaskCode::parse(task_arg));
  s.flush();
  out << "option_id,polarity,actionable,raw_sigmoid,issue_probability\n";
  for (const editing::IssueScore& sc : scores) {
    out << sc.option_id << "," << corpus::polarity_name(sc.polarity) << ","
        << (sc.actionable ? "true" : "false") << "," << fixed(sc.raw_sigmoid)
        << "," << fixed(sc.issue_probability) << "\n";
  }
  const bool any = std::any_of(scores.begin(), scores.end(), [](const auto& sc) {
    return sc.actionable && sc.polarity == corpus::Polarity::kDefect;
  });
  if (any) out << "top=" << editing::select_top_issue(scores).option_id << "\n";
}

void print_job(std::ostream& out, const editing::EditOutcome& o) {
  out << "job=" << o.dir.string() << "\n"
      << "option=" << o.job.option_id << " attempts=" << o.job.attempts
      << " p_before=" << fixed(o.job.p_before)
      << " p_after=" << fixed(o.job.p_after) << " delta=" << fixed(o.job.delta)
      << "\n";
}

void cmd_edit(Session& s, std::ostream& out, const std::string& pair,
              const std::string& task_arg, const std::string& option) {
  editing::EditContext ctx = s.edit_context();
  const corpus::TaskCode task = corpus::TaskCode::parse(task_arg);
  const editing::EditOutcome o =
      option.empty()
          ? editing::run_edit(ctx, pair, task)
          : editing::run_edit_for_option(ctx, pair, task,
                                         s.registry().option(task, option));
  s.flush();
  print_job(out, o);
}

void cmd_rescore(Session& s, std::ostream& out, const std::string& job_arg,
                 const std::string& pair, const std::string& task_arg,
                 const std::string& option, const std::string& image) {
  editing::EditContext ctx = s.edit_context();
  std::optional<editing::StoredJob> stored;
  std::string pair_id = pair, task_code = task_arg, option_id = option;
  fs::path edited = image;
  if (!job_arg.empty()) {
    stored = editing::read_job(job_arg);
    pair_id = stored->job.pair_id;
    task_code = stored->job.task;
    option_id = stored->job.option_id;
    edited = stored->edited_png;
  }
  if (pair_id.empty() || task_code.empty() || option_id.empty() || edited.empty()) {
    bad_config("rescore needs --job, or --pair, --task, --option and --image");
  }
  const corpus::TaskCode task = corpus::TaskCode::parse(task_code);
  const corpus::OptionDef& def = s.registry().option(task, option_id);
  const editing::PaddedImage padded = editing::pad_square(
      io::decode_png(io::read_bytes(s.pairs().at(pair_id).tactile_ref)));
  const editing::Rescore r =
      editing::rescore(ctx, pair_id, task, def, io::encode_png(padded.image),
                       io::read_bytes(edited));
  s.flush();
  out << "p_before=" << fixed(r.p_before) << " p_after=" << fixed(r.p_after)
      << " delta=" << fixed(r.delta) << "\n";
  if (stored) {
    const bool match = r.p_before == stored->job.p_before &&
                       r.p_after == stored->job.p_after &&
                       stored->job.delta == stored->job.p_before - stored->job.p_after;
    out << "stored_match=" << (match ? "true" : "false") << "\n";
    if (!match) {
      throw Error(ErrorCode::kInvariant, "re-scored values differ from " +
                                             job_arg + "/meta.json");
    }
  }
}

void cmd_study(Session& s, std::ostream& out, const editing::StudyConfig& sc) {
  const RunConfig& c = s.cfg();
  require_output("reports", c.reports);
  const std::vector<corpus::BinaryRecord> records = filter_records(
      s.records().records, std::nullopt, "", corpus::Split::kTest);
  editing::EditContext ctx = s.edit_context();
  const editing::StudyReport report = editing::batch_edit_study(ctx, records, sc);
  s.flush();
  fs::create_directories(c.reports);
  io::write_text_atomic(c.reports / "study.json", editing::serialize_study(report));
  io::write_text_atomic(c.reports / "study_deltas.csv",
                        editing::study_deltas_csv(report));
  out << "selected=" << report.entries.size() << " requested=" << report.requested
      << (report.short_of_target ? " short_of_target" : "")
      << " improved=" << report.improved << " mean_delta=" << fixed(report.mean_delta)
      << " median_delta=" << fixed(report.median_delta) << "\n";
  out << "wrote " << (c.reports / "study.json").string() << "\n";
}

void cmd_report(Session& s, std::ostream& out, std::size_t k) {
  const RunConfig& c = s.cfg();
  require_inputs({{"reports", &c.reports}});
  const evaluation::EvalReport report = evaluation::load_report(c.reports);
  out << "overall_accuracy=" << fixed(report.overall.accuracy())
      << " records=" << report.overall.total << "\n";
  out << "family_ordering:";
  for (const auto& r : evaluation::family_ordering(report)) {
    out << " " << r.key << "=" << fixed(r.accuracy);
  }
  out << "\ntask_ordering:";
  for (const auto& r : evaluation::difficulty_ordering(report)) {
    out << " " << r.key << "=" << fixed(r.accuracy);
  }
  out << "\nbottom_options:\n";
  for (const auto& r : evaluation::bottom_k_options(report, k)) {
    out << "  " << r.key << " " << fixed(r.accuracy) << " n=" << r.total << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Tactile graphics quality pipeline", "tactile"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  std::string config_path;
  bool show_version = false;
  app.add_option("--config", config_path, "Flat key = value run configuration");
  app.add_flag("--version", show_version,
               "Print version with registry and template checksums");
  std::map<std::string, std::string> flags;
  std::map<std::string, CLI::Option*> flag_opts;
  for (const auto& [key, help] : kConfigKeys) {
    flag_opts[key] = app.add_option("--" + key, flags[key], help);
  }

  std::string task, option, pair, split = "test", job, image;
  std::size_t k = 20;
  editing::StudyConfig study;

  CLI::App* aggregate = app.add_subcommand("aggregate", "Ballots -> binary records");
  CLI::App* features = app.add_subcommand("features", "Embed every record's inputs");
  CLI::App* train = app.add_subcommand("train", "Train one probe per option");
  train->add_option("--task", task, "Task code, e.g. F1QL (default: all)");
  train->add_option("--option", option, "Single option id (needs --task)");
  CLI::App* eval = app.add_subcommand("eval", "Evaluate probes on a split");
  eval->add_option("--task", task, "Restrict to one task");
  eval->add_option("--split", split, "train | val | test")->capture_default_str();
  CLI::App* score = app.add_subcommand("score", "Issue probabilities for a pair");
  score->add_option("--pair", pair)->required();
  score->add_option("--task", task)->required();
  CLI::App* edit = app.add_subcommand("edit", "Repair the top issue of a pair");
  edit->add_option("--pair", pair)->required();
  edit->add_option("--task", task)->required();
  edit->add_option("--option", option, "Force this option instead of the top issue");
  CLI::App* rescore = app.add_subcommand("rescore", "Re-score an edited tactile");
  rescore->add_option("--job", job, "Job directory to verify");
  rescore->add_option("--pair", pair);
  rescore->add_option("--task", task);
  rescore->add_option("--option", option);
  rescore->add_option("--image", image, "Edited tactile PNG");
  CLI::App* study_cmd = app.add_subcommand("study", "Batch edit study on the test split");
  study_cmd->add_option("--n", study.n, "Samples to edit")->capture_default_str();
  study_cmd->add_option("--min-votes", study.min_votes)->capture_default_str();
  study_cmd->add_option("--min-prob", study.min_probability)->capture_default_str();
  CLI::App* report = app.add_subcommand("report", "Orderings from exported reports");
  report->add_option("--k", k, "Bottom-k options")->capture_default_str();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: code=invalid_argument message=\"" << escape(e.what())
        << "\"\n";
    return 2;
  }

  try {
    std::map<std::string, std::string> kv;
    if (!config_path.empty()) kv = read_config_file(config_path);
    for (const auto& [key, opt] : flag_opts) {
      if (opt->count() > 0) kv[key] = flags[key];
    }
    Session session(make_config(kv));

    if (show_version) {
      out << "tactile " << TACTILE_VERSION
          << " registry-sha256=" << file_digest(session.cfg().registry)
          << " templates-sha256=" << file_digest(session.cfg().templates) << "\n";
      return 0;
    }
    if (app.get_subcommands().empty()) {
      err << "error: code=invalid_argument message=\"a subcommand is required\"\n";
      err << app.help();
      return 2;
    }
    if (aggregate->parsed()) cmd_aggregate(session, out);
    if (features->parsed()) cmd_features(session, out);
    if (train->parsed()) cmd_train(session, out, task, option);
    if (eval->parsed()) cmd_eval(session, out, task, split);
    if (score->parsed()) cmd_score(session, out, pair, task);
    if (edit->parsed()) cmd_edit(session, out, pair, task, option);
    if (rescore->parsed()) cmd_rescore(session, out, job, pair, task, option, image);
    if (study_cmd->parsed()) cmd_study(session, out, study);
    if (report->parsed()) cmd_report(session, out, k);
    return 0;
  } catch (const Error& e) {
    err << "error: code=" << error_code_name(e.code()) << " message=\""
        << escape(e.what()) << "\"\n";
  } catch (const std::exception& e) {
    err << "error: code=internal message=\"" << escape(e.what()) << "\"\n";
  }
  return 1;
}

}  // namespace tactile::tools
