// Copyright 2026 The kmsmote Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KMSMOTE_IO_H_
#define KMSMOTE_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace kmsmote {

// Shortest decimal text that parses back to the same double. Integral
// values print without a fraction ("127"), which matches Python's repr for
// the values found in the bundled datasets.
std::string FormatDouble(double value);

// Strict, locale-independent parse of a whole field. Returns false on
// trailing garbage or empty input.
bool ParseDouble(std::string_view text, double& out);

// Splits one CSV record on commas, trimming surrounding whitespace. A field
// in double quotes may contain commas, with "" standing for one quote.
std::vector<std::string> SplitCsvLine(std::string_view line);

std::string ReadFile(const std::filesystem::path& path);

// Writes to a sibling temporary file and renames it over `path`.
void WriteFileAtomic(const std::filesystem::path& path,
                     std::string_view content);

}  // namespace kmsmote

#endif  // KMSMOTE_IO_H_
