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

#include "ldechain/table.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace lde {
namespace {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string quote_if_needed(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  cells.push_back(std::move(cur));
  return cells;
}

nlohmann::json cell_to_json(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  if (const auto* d = std::get_if<double>(&c)) {
    if (std::isfinite(*d)) return *d;
    return format_double(*d);  // JSON has no NaN/Inf literals
  }
  return std::get<std::string>(c);
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::invalid_argument("table: row has " + std::to_string(row.size()) + " cells, expected " +
                                std::to_string(columns.size()));
  }
  rows.push_back(std::move(row));
}

std::size_t Table::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw std::out_of_range("table: no column named '" + std::string(name) + "'");
}

OutputFormat parse_format(std::string_view text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown output format '" + std::string(text) + "' (expected csv or json)");
}

std::string_view to_string(OutputFormat format) { return format == OutputFormat::Csv ? "csv" : "json"; }

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << quote_if_needed(table.columns[i]);
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      std::visit(
          [&out](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              out << format_double(v);
            } else if constexpr (std::is_same_v<T, std::string>) {
              out << quote_if_needed(v);
            } else {
              out << v;
            }
          },
          row[i]);
    }
    out << '\n';
  }
}

nlohmann::json table_to_json(const Table& table, const nlohmann::json& metadata) {
  nlohmann::json doc;
  doc["metadata"] = metadata.is_null() ? nlohmann::json::object() : metadata;
  doc["columns"] = table.columns;
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json r = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) r[table.columns[i]] = cell_to_json(row[i]);
    doc["rows"].push_back(std::move(r));
  }
  return doc;
}

Table table_from_json(const nlohmann::json& doc) {
  Table t;
  t.columns = doc.at("columns").get<std::vector<std::string>>();
  for (const auto& r : doc.at("rows")) {
    std::vector<Cell> row;
    for (const auto& name : t.columns) {
      const auto& v = r.at(name);
      if (v.is_number_integer()) {
        row.emplace_back(v.get<std::int64_t>());
      } else if (v.is_number()) {
        row.emplace_back(v.get<double>());
      } else {
        row.emplace_back(v.get<std::string>());
      }
    }
    t.add_row(std::move(row));
  }
  return t;
}

void emit(const Table& table, OutputFormat format, const std::string& path, const nlohmann::json& metadata) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (path != "-") {
    file.open(path, std::ios::out | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    out = &file;
  }
  if (format == OutputFormat::Csv) {
    write_csv(table, *out);
  } else {
    *out << table_to_json(table, metadata).dump(2) << '\n';
  }
  out->flush();
  if (!*out) throw IoError("write failed for '" + path + "'");
}

Table parse_csv(std::istream& in) {
  Table t;
  std::string line;
  if (!std::getline(in, line)) throw IoError("csv: missing header row");
  t.columns = split_csv_line(line);
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    auto cells = split_csv_line(line);
    if (cells.size() != t.columns.size()) {
      throw IoError("csv: row with " + std::to_string(cells.size()) + " cells, header has " +
                    std::to_string(t.columns.size()));
    }
    t.rows.emplace_back(cells.begin(), cells.end());
  }
  return t;
}

Table read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return parse_csv(in);
}

double cell_as_double(const Cell& cell) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return static_cast<double>(*i);
  if (const auto* d = std::get_if<double>(&cell)) return *d;
  const auto& s = std::get<std::string>(cell);
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
}

}  // namespace lde
