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

#include "tactile/corpus/taxonomy.h"

#include "json.hpp"

#include <algorithm>

#include "tactile/error.h"
#include "tactile/io/files.h"

namespace tactile::corpus {

namespace {

constexpr std::array<std::string_view, 6> kFamilyCodes = {"F1", "F2", "F3",
                                                          "F4", "F5", "F6"};
constexpr std::array<std::string_view, 5> kDimensionCodes = {"QV", "QP", "QB",
                                                             "QT", "QL"};

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformed, "registry: " + what);
}

std::string require_string(const nlohmann::json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    malformed(std::string("missing string field '") + key + "'");
  }
  return it->get<std::string>();
}

}  // namespace

std::string_view family_code(Family f) {
  return kFamilyCodes[static_cast<int>(f) - 1];
}

Family parse_family(std::string_view code) {
  for (std::size_t i = 0; i < kFamilyCodes.size(); ++i) {
    if (kFamilyCodes[i] == code) return static_cast<Family>(i + 1);
  }
  throw Error(ErrorCode::kMalformed,
              "unknown family code '" + std::string(code) + "'");
}

std::string_view dimension_code(Dimension d) {
  return kDimensionCodes[static_cast<int>(d)];
}

Dimension parse_dimension(std::string_view code) {
  for (std::size_t i = 0; i < kDimensionCodes.size(); ++i) {
    if (kDimensionCodes[i] == code) return static_cast<Dimension>(i);
  }
  throw Error(ErrorCode::kMalformed,
              "unknown dimension code '" + std::string(code) + "'");
}

std::string TaskCode::str() const {
  std::string out(family_code(family));
  out += dimension_code(dimension);
  return out;
}

TaskCode TaskCode::parse(std::string_view code) {
  if (code.size() != 4) {
    throw Error(ErrorCode::kMalformed,
                "task code must look like F1QL, got '" + std::string(code) +
                    "'");
  }
  return TaskCode{parse_family(code.substr(0, 2)),
                  parse_dimension(code.substr(2, 2))};
}

std::string_view polarity_name(Polarity p) {
  return p == Polarity::kPass ? "pass" : "defect";
}

Registry::Registry(std::vector<FamilyInfo> families,
                   std::vector<DimensionInfo> dimensions,
                   std::vector<TaskInfo> tasks,
                   const std::set<std::string>& template_keys)
    : families_(std::move(families)),
      dimensions_(std::move(dimensions)),
      tasks_(std::move(tasks)) {
  std::sort(families_.begin(), families_.end(),
            [](auto& a, auto& b) { return a.code < b.code; });
  std::sort(dimensions_.begin(), dimensions_.end(),
            [](auto& a, auto& b) { return a.code < b.code; });
  std::sort(tasks_.begin(), tasks_.end(),
            [](auto& a, auto& b) { return a.code < b.code; });

  if (families_.size() != kAllFamilies.size()) {
    malformed("exactly six families are required");
  }
  for (std::size_t i = 0; i < families_.size(); ++i) {
    if (families_[i].code != kAllFamilies[i]) malformed("duplicate family");
    if (families_[i].name.empty()) malformed("family without a name");
  }
  if (dimensions_.size() != kAllDimensions.size()) {
    malformed("exactly five dimensions are required");
  }
  for (std::size_t i = 0; i < dimensions_.size(); ++i) {
    if (dimensions_[i].code != kAllDimensions[i]) {
      malformed("duplicate dimension");
    }
  }
  if (tasks_.empty()) malformed("zero tasks");

  for (std::size_t i = 0; i < tasks_.size(); ++i) {
    TaskInfo& t = tasks_[i];
    const std::string code = t.code.str();
    if (!task_index_.emplace(t.code, i).second) {
      throw Error(ErrorCode::kDuplicate, "registry: duplicate task " + code);
    }
    if (t.options.size() < kMinOptionsPerTask ||
        t.options.size() > kMaxOptionsPerTask) {
      throw Error(ErrorCode::kInvariant,
                  "registry: task " + code + " has " +
                      std::to_string(t.options.size()) +
                      " options, expected 3 to 7");
    }
    std::set<std::string_view> seen;
    for (OptionDef& o : t.options) {
      o.task = t.code;
      if (o.id.empty()) malformed("empty option id in " + code);
      if (!seen.insert(o.id).second) {
        throw Error(ErrorCode::kDuplicate,
                    "registry: duplicate option id '" + o.id + "' in " + code);
      }
      if (o.polarity == Polarity::kPass && o.actionable) {
        throw Error(ErrorCode::kInvariant, "registry: pass option '" + o.id +
                                               "' in " + code +
                                               " cannot be actionable");
      }
      if (o.actionable &&
          (o.template_key.empty() || !template_keys.contains(o.template_key))) {
        throw Error(ErrorCode::kUnknownReference,
                    "registry: actionable option '" + o.id + "' in " + code +
                        " has unresolvable template key '" + o.template_key +
                        "'");
      }
    }
  }
}

const std::string& Registry::family_name(Family f) const {
  return families_[static_cast<int>(f) - 1].name;
}

bool Registry::has_task(TaskCode task) const {
  return task_index_.contains(task);
}

const TaskInfo& Registry::task(TaskCode task) const {
  auto it = task_index_.find(task);
  if (it == task_index_.end()) {
    throw Error(ErrorCode::kUnknownReference, "unknown task " + task.str());
  }
  return tasks_[it->second];
}

std::span<const OptionDef> Registry::options(TaskCode task) const {
  return this->task(task).options;
}

const OptionDef* Registry::find_option(TaskCode task,
                                       std::string_view id) const {
  auto it = task_index_.find(task);
  if (it == task_index_.end()) return nullptr;
  for (const OptionDef& o : tasks_[it->second].options) {
    if (o.id == id) return &o;
  }
  return nullptr;
}

const OptionDef& Registry::option(TaskCode task, std::string_view id) const {
  const OptionDef* o = find_option(task, id);
  if (o == nullptr) {
    throw Error(ErrorCode::kUnknownReference,
                "unknown option " + task.str() + "/" + std::string(id));
  }
  return *o;
}

std::size_t Registry::option_count() const {
  std::size_t n = 0;
  for (const TaskInfo& t : tasks_) n += t.options.size();
  return n;
}

Registry parse_registry(std::string_view json_text,
                        const std::set<std::string>& template_keys) {
  if (json_text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    malformed("empty document");
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(e.what());
  }
  if (!doc.is_object()) malformed("top level must be an object");

  std::vector<FamilyInfo> families;
  if (!doc.contains("families") || !doc["families"].is_array()) {
    malformed("missing 'families' array");
  }
  for (const auto& f : doc["families"]) {
    families.push_back(
        {parse_family(require_string(f, "code")), require_string(f, "name")});
  }

  std::vector<DimensionInfo> dimensions;
  if (!doc.contains("dimensions") || !doc["dimensions"].is_array()) {
    malformed("missing 'dimensions' array");
  }
  for (const auto& d : doc["dimensions"]) {
    dimensions.push_back({parse_dimension(require_string(d, "code")),
                          require_string(d, "name"),
                          d.value("description", std::string())});
  }

  std::vector<TaskInfo> tasks;
  if (!doc.contains("tasks") || !doc["tasks"].is_array()) {
    malformed("missing 'tasks' array");
  }
  for (const auto& t : doc["tasks"]) {
    TaskInfo info;
    info.code = TaskCode::parse(require_string(t, "task"));
    info.question = t.value("question", std::string());
    if (!t.contains("options") || !t["options"].is_array()) {
      malformed("task " + info.code.str() + " has no 'options' array");
    }
    for (const auto& o : t["options"]) {
      OptionDef def;
      def.id = require_string(o, "id");
      def.description = require_string(o, "description");
      std::string polarity = require_string(o, "polarity");
      if (polarity == "pass") {
        def.polarity = Polarity::kPass;
      } else if (polarity == "defect") {
        def.polarity = Polarity::kDefect;
      } else {
        malformed("option '" + def.id + "' has polarity '" + polarity + "'");
      }
      auto act = o.find("actionable");
      if (act == o.end() || !act->is_boolean()) {
        malformed("option '" + def.id + "' lacks boolean 'actionable'");
      }
      def.actionable = act->get<bool>();
      def.template_key = o.value("template_key", std::string());
      info.options.push_back(std::move(def));
    }
    tasks.push_back(std::move(info));
  }
  return Registry(std::move(families), std::move(dimensions), std::move(tasks),
                  template_keys);
}

Registry load_registry(const std::filesystem::path& path,
                       const std::set<std::string>& template_keys) {
  return parse_registry(io::read_text(path), template_keys);
}

}  // namespace tactile::corpus
