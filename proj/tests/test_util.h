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

#ifndef TACTILE_TESTS_TEST_UTIL_H_
#define TACTILE_TESTS_TEST_UTIL_H_

#include <atomic>
#include <filesystem>
#include <set>
#include <string>
#include <unistd.h>

#include "tactile/corpus/taxonomy.h"
#include "tactile/editing/templates.h"

namespace tactile::testing {

inline std::filesystem::path data_dir() { return TACTILE_DATA_DIR; }

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("tactile-test-" + std::to_string(::getpid()) + "-" +
             std::to_string(counter.fetch_add(1)));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

inline const editing::TemplateRegistry& shipped_templates() {
  static const editing::TemplateRegistry t =
      editing::load_templates(data_dir() / "templates.json");
  return t;
}

inline const corpus::Registry& shipped_registry() {
  static const corpus::Registry r = corpus::load_registry(
      data_dir() / "registry.json", shipped_templates().keys());
  return r;
}

// Full families/dimensions header around a caller-supplied tasks array.
inline std::string registry_json(const std::string& tasks) {
  return R"({"families":[{"code":"F1","name":"a"},{"code":"F2","name":"b"},)"
         R"({"code":"F3","name":"c"},{"code":"F4","name":"d"},)"
         R"({"code":"F5","name":"e"},{"code":"F6","name":"f"}],)"
         R"("dimensions":[{"code":"QV","name":"v","description":""},)"
         R"({"code":"QP","name":"p","description":""},)"
         R"({"code":"QB","name":"b","description":""},)"
         R"({"code":"QT","name":"t","description":""},)"
         R"({"code":"QL","name":"l","description":""}],)"
         R"("tasks":)" +
         tasks + "}";
}

inline std::string option_json(const std::string& id, bool pass = false,
                               const std::string& key = "") {
  const std::string k = pass ? "" : (key.empty() ? id : key);
  return R"({"id":")" + id + R"(","description":"d )" + id +
         R"(","polarity":")" + (pass ? "pass" : "defect") +
         R"(","actionable":)" + (pass ? "false" : "true") +
         R"(,"template_key":")" + k + R"("})";
}

}  // namespace tactile::testing

#endif  // TACTILE_TESTS_TEST_UTIL_H_
