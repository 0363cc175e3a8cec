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

#ifndef TACTILE_CORPUS_TAXONOMY_H_
#define TACTILE_CORPUS_TAXONOMY_H_

#include <array>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tactile::corpus {

enum class Family : std::uint8_t { kF1 = 1, kF2, kF3, kF4, kF5, kF6 };

inline constexpr std::array<Family, 6> kAllFamilies = {
    Family::kF1, Family::kF2, Family::kF3,
    Family::kF4, Family::kF5, Family::kF6};

// View match, required parts, identity & background, texture separation,
// line quality.
enum class Dimension : std::uint8_t { kQV, kQP, kQB, kQT, kQL };

inline constexpr std::array<Dimension, 5> kAllDimensions = {
    Dimension::kQV, Dimension::kQP, Dimension::kQB, Dimension::kQT,
    Dimension::kQL};

std::string_view family_code(Family f);
Family parse_family(std::string_view code);
std::string_view dimension_code(Dimension d);
Dimension parse_dimension(std::string_view code);

// Family x dimension, printed as e.g. "F1QL".
struct TaskCode {
  Family family = Family::kF1;
  Dimension dimension = Dimension::kQV;

  std::string str() const;
  static TaskCode parse(std::string_view code);

  friend auto operator<=>(const TaskCode&, const TaskCode&) = default;
};

enum class Polarity : std::uint8_t { kDefect, kPass };

std::string_view polarity_name(Polarity p);

struct OptionDef {
  std::string id;
  TaskCode task;
  std::string description;
  Polarity polarity = Polarity::kDefect;
  bool actionable = false;
  std::string template_key;
};

struct FamilyInfo {
  Family code;
  std::string name;
};

struct DimensionInfo {
  Dimension code;
  std::string name;
  std::string description;
};

struct TaskInfo {
  TaskCode code;
  std::string question;
  std::vector<OptionDef> options;
};

inline constexpr std::size_t kMinOptionsPerTask = 3;
inline constexpr std::size_t kMaxOptionsPerTask = 7;

// Immutable taxonomy: families, dimensions and per-task checkbox options.
class Registry {
 public:
  Registry(std::vector<FamilyInfo> families,
           std::vector<DimensionInfo> dimensions, std::vector<TaskInfo> tasks,
           const std::set<std::string>& template_keys);

  const std::vector<FamilyInfo>& families() const { return families_; }
  const std::vector<DimensionInfo>& dimensions() const { return dimensions_; }
  const std::vector<TaskInfo>& tasks() const { return tasks_; }

  const std::string& family_name(Family f) const;
  bool has_task(TaskCode task) const;
  const TaskInfo& task(TaskCode task) const;
  std::span<const OptionDef> options(TaskCode task) const;
  // Null when absent.
  const OptionDef* find_option(TaskCode task, std::string_view id) const;
  // Throws Error(kUnknownReference) when absent.
  const OptionDef& option(TaskCode task, std::string_view id) const;
  std::size_t option_count() const;

 private:
  std::vector<FamilyInfo> families_;
  std::vector<DimensionInfo> dimensions_;
  std::vector<TaskInfo> tasks_;
  std::map<TaskCode, std::size_t> task_index_;
};

// Parses the JSON registry document and validates every option invariant.
// `template_keys` are the repair-template keys actionable options may use.
Registry parse_registry(std::string_view json_text,
                        const std::set<std::string>& template_keys);
Registry load_registry(const std::filesystem::path& path,
                       const std::set<std::string>& template_keys);

}  // namespace tactile::corpus

#endif  // TACTILE_CORPUS_TAXONOMY_H_
