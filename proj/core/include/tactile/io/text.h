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

#ifndef TACTILE_IO_TEXT_H_
#define TACTILE_IO_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace tactile::io {

// Splits one delimited row. Double-quoted fields may contain the delimiter;
// a doubled quote inside quotes is a literal quote.
std::vector<std::string> split_row(std::string_view line, char delim = ',');

// Splits a line-oriented document, dropping a trailing '\r' on each line.
std::vector<std::string> split_lines(std::string_view text);

std::vector<std::string> split_list(std::string_view joined, char delim = ';');
std::string join(const std::vector<std::string>& parts, std::string_view sep);

std::string_view trim(std::string_view s);

// Shortest decimal text that parses back to the same double.
std::string format_double(double value);
// Fixed-point with `digits` decimals.
std::string format_fixed(double value, int digits);

}  // namespace tactile::io

#endif  // TACTILE_IO_TEXT_H_
