// Copyright 2026 The Vaxgame Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VAXGAME_CLI_CSV_H_
#define VAXGAME_CLI_CSV_H_

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "vaxgame/params.h"

namespace vaxgame::cli {

inline constexpr int kCsvSchemaVersion = 1;

// 12 significant digits with trailing zeros dropped; fixed notation for |x|
// in [1e-3, 1e6), scientific otherwise. Zero (of either sign) prints as "0".
std::string FormatNumber(double x);

// Quotes a field if it contains a comma, quote or newline.
std::string CsvField(std::string_view text);

// "# vaxgame csv schema=1 command=... alpha=... ... r=..." plus any extra
// settings given as key=value strings.
std::string CsvHeaderComment(std::string_view command,
                             const ModelParams& params,
                             const std::vector<std::string>& extra = {});

// Buffers rows in memory; WriteFile replaces the target in one go.
class CsvTable {
 public:
  CsvTable(std::string header_comment, std::vector<std::string> columns);

  // Cells are written as given; use FormatNumber / CsvField for content.
  void AddRow(std::vector<std::string> cells);

  void Write(std::ostream& out) const;
  void WriteFile(const std::string& path) const;

 private:
  std::string comment_;
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace vaxgame::cli

#endif  // VAXGAME_CLI_CSV_H_
