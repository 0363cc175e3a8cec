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

#ifndef TACTILE_EDITING_TEMPLATES_H_
#define TACTILE_EDITING_TEMPLATES_H_

#include <array>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "tactile/corpus/taxonomy.h"

namespace tactile::editing {

// Every family footer must mention these, case-insensitively.
inline constexpr std::array<std::string_view, 3> kGuardrailPhrases = {
    "clean silhouettes", "stroke continuity", "background cleanliness"};

struct FamilyFrame {
  std::string header;
  std::string footer;
};

// Repair instructions keyed by template key, and per-family prompt frames.
//
// JSON document:
//   {"issue_templates": {"<key>": "<instruction>", ...},
//    "frames": {"F1": {"header": "...", "footer": "..."}, ...}}
class TemplateRegistry {
 public:
  TemplateRegistry(std::map<std::string, std::string, std::less<>> issue_templates,
                   std::map<corpus::Family, FamilyFrame> frames);

  std::set<std::string> keys() const;
  // Throw Error(kUnknownReference).
  const std::string& instruction(std::string_view key) const;
  const FamilyFrame& frame(corpus::Family family) const;

 private:
  std::map<std::string, std::string, std::less<>> issue_templates_;
  std::map<corpus::Family, FamilyFrame> frames_;
};

TemplateRegistry parse_templates(std::string_view json_text);
TemplateRegistry load_templates(const std::filesystem::path& path);

// header + "\n" + instruction + "\n" + footer.
std::string build_prompt(corpus::Family family, std::string_view template_key,
                         const TemplateRegistry& templates);

}  // namespace tactile::editing

#endif  // TACTILE_EDITING_TEMPLATES_H_
