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

#include "vaxgame/cli/csv.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "vaxgame/errors.h"

namespace vaxgame::cli {

std::string FormatNumber(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buf[64];
  const double mag = std::abs(x);
  if (mag >= 1e-3 && mag < 1e6) {
    const int exponent = static_cast<int>(std::floor(std::log10(mag)));
    const int decimals = std::max(0, 11 - exponent);
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, x);
    std::string s = buf;
    if (s.find('.') != std::string::npos) {
      s.erase(s.find_last_not_of('0') + 1);
      if (s.back() == '.') s.pop_back();
    }
    return s;
  }
  std::snprintf(buf, sizeof(buf), "%.11e", x);
  std::string s = buf;
  const auto e = s.find('e');
  auto mantissa_end = s.find_last_not_of('0', e - 1) + 1;
  if (s[mantissa_end - 1] == '.') --mantissa_end;
  return s.substr(0, mantissa_end) + s.substr(e);
}

std::string CsvField(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) {
    return std::string(text);
  }
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string CsvHeaderComment(std::string_view command,
                             const ModelParams& params,
                             const std::vector<std::string>& extra) {
  std::string s = "# vaxgame csv schema=" + std::to_string(kCsvSchemaVersion) +
                  " command=" + std::string(command);
  for (std::string_view name : kParamNames) {
    s += " " + std::string(name) + "=" + FormatNumber(ParamValue(params, name));
  }
  for (const std::string& e : extra) s += " " + e;
  return s;
}

CsvTable::CsvTable(std::string header_comment, std::vector<std::string> columns)
    : comment_(std::move(header_comment)), columns_(std::move(columns)) {}

void CsvTable::AddRow(std::vector<std::string> cells) {
  if (cells.size() != columns_.size()) {
    throw UsageError("CSV row has " + std::to_string(cells.size()) +
                     " cells, expected " + std::to_string(columns_.size()));
  }
  rows_.push_back(std::move(cells));
}

void CsvTable::Write(std::ostream& out) const {
  out << comment_ << '\n';
  const auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  line(columns_);
  for (const auto& row : rows_) line(row);
}

void CsvTable::WriteFile(const std::string& path) const {
  std::ostringstream buffer;
  Write(buffer);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << buffer.str();
  if (!file) throw UsageError("failed writing '" + path + "'");
}

}  // namespace vaxgame::cli
