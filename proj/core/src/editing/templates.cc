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

#include "tactile/editing/templates.h"

#include <algorithm>
#include <cctype>

#include "json.hpp"
#include "tactile/error.h"
#include "tactile/io/files.h"

namespace tactile::editing {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

TemplateRegistry::TemplateRegistry(
    std::map<std::string, std::string, std::less<>> issue_templates,
    std::map<corpus::Family, FamilyFrame> frames)
    : issue_templates_(std::move(issue_templates)), frames_(std::move(frames)) {
  for (corpus::Family f : corpus::kAllFamilies) {
    auto it = frames_.find(f);
    if (it == frames_.end()) {
      throw Error(ErrorCode::kMalformed,
                  "templates: no frame for family " +
                      std::string(corpus::family_code(f)));
    }
    const std::string footer = lower(it->second.footer);
    for (std::string_view phrase : kGuardrailPhrases) {
      if (footer.find(phrase) == std::string::npos) {
        throw Error(ErrorCode::kInvariant,
                    "templates: footer for " +
                        std::string(corpus::family_code(f)) +
                        " does not mention '" + std::string(phrase) + "'");
      }
    }
  }
  for (const auto& [key, text] : issue_templates_) {
    if (key.empty() || text.empty()) {
      throw Error(ErrorCode::kMalformed, "templates: empty key or instruction");
    }
  }
}

std::set<std::string> TemplateRegistry::keys() const {
  std::set<std::string> out;
  for (const auto& [key, text] : issue_templates_) out.insert(key);
  return out;
}

const std::string& TemplateRegistry::instruction(std::string_view key) const {
  auto it = issue_templates_.find(key);
  if (it == issue_templates_.end()) {
    throw Error(ErrorCode::kUnknownReference,
                "unknown issue template '" + std::string(key) + "'");
  }
  return it->second;
}

const FamilyFrame& TemplateRegistry::frame(corpus::Family family) const {
  auto it = frames_.find(family);
  if (it == frames_.end()) {
    throw Error(ErrorCode::kUnknownReference,
                "no prompt frame for family " +
                    std::string(corpus::family_code(family)));
  }
  return it->second;
}

TemplateRegistry parse_templates(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kMalformed, std::string("templates: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("issue_templates") ||
      !doc.contains("frames") || !doc["issue_templates"].is_object() ||
      !doc["frames"].is_object()) {
    throw Error(ErrorCode::kMalformed,
                "templates: expected 'issue_templates' and 'frames' objects");
  }
  std::map<std::string, std::string, std::less<>> issues;
  std::map<corpus::Family, FamilyFrame> frames;
  try {
    for (const auto& [key, text] : doc["issue_templates"].items()) {
      issues.emplace(key, text.get<std::string>());
    }
    for (const auto& [code, frame] : doc["frames"].items()) {
      frames.emplace(corpus::parse_family(code),
                     FamilyFrame{frame.at("header").get<std::string>(),
                                 frame.at("footer").get<std::string>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformed, std::string("templates: ") + e.what());
  }
  return TemplateRegistry(std::move(issues), std::move(frames));
}

TemplateRegistry load_templates(const std::filesystem::path& path) {
  return parse_templates(io::read_text(path));
}

std::string build_prompt(corpus::Family family, std::string_view template_key,
                         const TemplateRegistry& templates) {
  const FamilyFrame& frame = templates.frame(family);
  return frame.header + "\n" + templates.instruction(template_key) + "\n" +
         frame.footer;
}

}  // namespace tactile::editing
