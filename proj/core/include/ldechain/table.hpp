// Copyright 2026 The ldechain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lde {

using Cell = std::variant<std::int64_t, double, std::string>;

/// Column-ordered result table. Rows must have one cell per column.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
  std::size_t column_index(std::string_view name) const;
};

enum class OutputFormat { Csv, Json };

OutputFormat parse_format(std::string_view text);
std::string_view to_string(OutputFormat format);

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Header row then one line per row; doubles use 17 significant digits.
void write_csv(const Table& table, std::ostream& out);

/// {"metadata": ..., "columns": [...], "rows": [{column: value}, ...]}
nlohmann::json table_to_json(const Table& table, const nlohmann::json& metadata);
Table table_from_json(const nlohmann::json& doc);

/// Writes to `path`, or standard output when path is "-". Throws IoError.
void emit(const Table& table, OutputFormat format, const std::string& path, const nlohmann::json& metadata = {});

/// Reads a headered CSV; every cell is kept as text.
Table read_csv(const std::string& path);
Table parse_csv(std::istream& in);

double cell_as_double(const Cell& cell);

}  // namespace lde
