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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ldechain/config.hpp"
#include "ldechain/scan.hpp"
#include "ldechain/table.hpp"

using namespace lde;

namespace {

std::string csv_of(const Table& t) {
  std::ostringstream out;
  write_csv(t, out);
  return out.str();
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("ldechain_test_" + name);
}

}  // namespace

TEST(Table, EmptyTableIsHeaderOnly) {
  Table t{{"L", "delta", "C_AB"}, {}};
  EXPECT_EQ(csv_of(t), "L,delta,C_AB\n");
}

TEST(Table, CsvFormatting) {
  Table t{{"L", "x", "name"}, {}};
  t.add_row({std::int64_t{8}, 0.1, std::string("ok")});
  t.add_row({std::int64_t{10}, std::nan(""), std::string("a,b")});
  t.add_row({std::int64_t{12}, -INFINITY, std::string("say \"hi\"")});
  EXPECT_EQ(csv_of(t), "L,x,name\n8,0.10000000000000001,ok\n10,nan,\"a,b\"\n12,-inf,\"say \"\"hi\"\"\"\n");
}

TEST(Table, CsvRoundTripKeepsDoublesExactly) {
  Table t{{"v"}, {}};
  const std::vector<double> values{1.0 / 3.0, -0.28306484, 1e-300, 6.02214076e23};
  for (double v : values) t.add_row({v});
  std::istringstream in(csv_of(t));
  const auto back = parse_csv(in);
  ASSERT_EQ(back.rows.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) EXPECT_EQ(cell_as_double(back.rows[i][0]), values[i]);
}

TEST(Table, CsvParsingQuotes) {
  std::istringstream in("a,b\n\"x,y\",\"q\"\"q\"\n");
  const auto t = parse_csv(in);
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(std::get<std::string>(t.rows[0][0]), "x,y");
  EXPECT_EQ(std::get<std::string>(t.rows[0][1]), "q\"q");
  std::istringstream ragged("a,b\n1\n");
  EXPECT_THROW(parse_csv(ragged), IoError);
  std::istringstream empty("");
  EXPECT_THROW(parse_csv(empty), IoError);
}

TEST(Table, RowWidthIsChecked) {
  Table t{{"a", "b"}, {}};
  EXPECT_THROW(t.add_row({std::int64_t{1}}), std::invalid_argument);
  EXPECT_EQ(t.column_index("b"), 1u);
  EXPECT_THROW(t.column_index("c"), std::out_of_range);
}

TEST(Table, JsonRoundTrip) {
  Table t{{"L", "gamma_zz", "status"}, {}};
  t.add_row({std::int64_t{24}, -0.1234567890123456789, std::string("ok")});
  const nlohmann::json meta{{"model", "dimer"}, {"seed", 5}};
  const auto doc = nlohmann::json::parse(table_to_json(t, meta).dump());
  EXPECT_EQ(doc["metadata"]["model"], "dimer");
  EXPECT_EQ(doc["columns"], nlohmann::json({"L", "gamma_zz", "status"}));
  const auto back = table_from_json(doc);
  EXPECT_EQ(back.columns, t.columns);
  EXPECT_EQ(back.rows, t.rows);
}

TEST(Table, DocumentedColumnOrder) {
  EXPECT_EQ(dimer_table({}).columns,
            (std::vector<std::string>{"L", "delta", "alpha", "E0", "degeneracy", "S_tot", "gamma_zz", "C_AB", "status"}));
  EXPECT_EQ(spin1_table({}).columns, (std::vector<std::string>{"L", "beta", "E0", "S_tot", "zz", "charge", "PC",
                                                               "N_rdm", "N_su2", "verdict", "status"}));
  EXPECT_EQ(probe_table({}).columns,
            (std::vector<std::string>{"L", "d", "Jp", "E0", "S_tot", "degeneracy", "gamma_zz", "C_AB", "status"}));
  EXPECT_EQ(threshold_table({}).columns,
            (std::vector<std::string>{"alpha", "L", "delta_T", "bracket_width", "evaluations", "status"}));
}

TEST(Table, EmitWritesFilesAndReportsFailures) {
  Table t{{"a"}, {}};
  t.add_row({std::int64_t{3}});
  const auto path = temp_path("emit.csv");
  emit(t, OutputFormat::Csv, path.string());
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  EXPECT_EQ(buffer.str(), "a\n3\n");
  std::filesystem::remove(path);

  const auto jpath = temp_path("emit.json");
  emit(t, OutputFormat::Json, jpath.string(), {{"tool_version", "x"}});
  std::ifstream jin(jpath);
  const auto doc = nlohmann::json::parse(jin);
  EXPECT_EQ(doc["rows"][0]["a"], 3);
  std::filesystem::remove(jpath);

  EXPECT_THROW(emit(t, OutputFormat::Csv, "/nonexistent-dir/out.csv"), IoError);
  EXPECT_THROW(read_csv("/nonexistent-dir/in.csv"), IoError);
}

TEST(Table, FormatNames) {
  EXPECT_EQ(parse_format("csv"), OutputFormat::Csv);
  EXPECT_EQ(parse_format("json"), OutputFormat::Json);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

TEST(Config, Grids) {
  EXPECT_EQ(parse_real_grid("0.1,0.2, 0.5"), (std::vector<double>{0.1, 0.2, 0.5}));
  const auto r = parse_real_grid("0:0.5:0.1");
  ASSERT_EQ(r.size(), 6u);
  EXPECT_NEAR(r.back(), 0.5, 1e-15);
  EXPECT_EQ(parse_int_grid("8:24:4"), (std::vector<int>{8, 12, 16, 20, 24}));
  EXPECT_THROW(parse_int_grid("8,9.5"), ConfigError);
  EXPECT_THROW(parse_real_grid(""), ConfigError);
  EXPECT_THROW(parse_real_grid("1:2"), ConfigError);
  EXPECT_THROW(parse_real_grid("2:1:0.1"), ConfigError);
  EXPECT_THROW(parse_real_grid("0:1:0"), ConfigError);
  EXPECT_THROW(parse_real_grid("abc"), ConfigError);
}

TEST(Config, FromJson) {
  const auto c = config_from_json(nlohmann::json::parse(
      R"({"model": "dimer", "L": "8:16:4", "delta": [0.1, 0.5], "alpha": 0.5, "seed": 9, "format": "json"})"));
  EXPECT_EQ(c.model, "dimer");
  EXPECT_EQ(c.lengths, (std::vector<int>{8, 12, 16}));
  EXPECT_EQ(c.deltas, (std::vector<double>{0.1, 0.5}));
  EXPECT_EQ(c.alphas, (std::vector<double>{0.5}));
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.format, OutputFormat::Json);
  EXPECT_EQ(c.two_sz, 0);
}

TEST(Config, OverlayKeepsBase) {
  RunConfig base;
  base.seed = 3;
  base.lengths = {10};
  const auto c = config_from_json(nlohmann::json::parse(R"({"L": 12})"), base);
  EXPECT_EQ(c.seed, 3u);
  EXPECT_EQ(c.lengths, (std::vector<int>{12}));
}

TEST(Config, Errors) {
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"bogus": 1})")), ConfigError);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"([1, 2])")), ConfigError);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"delta": []})")), ConfigError);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"L": [8.5]})")), ConfigError);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"seed": "x"})")), ConfigError);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"workers": 0})")), ConfigError);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"format": "xml"})")), ConfigError);
  EXPECT_THROW(load_config("/nonexistent-dir/cfg.json"), ConfigError);
}

TEST(Config, JsonRoundTrip) {
  RunConfig c;
  c.model = "probes";
  c.lengths = {14};
  c.couplings = {0.1, 1.0};
  c.offsets = {1, 3};
  c.high_memory = true;
  const auto back = config_from_json(config_to_json(c));
  EXPECT_EQ(back.model, c.model);
  EXPECT_EQ(back.lengths, c.lengths);
  EXPECT_EQ(back.couplings, c.couplings);
  EXPECT_EQ(back.offsets, c.offsets);
  EXPECT_EQ(back.high_memory, true);
  EXPECT_EQ(config_from_json(config_to_json(RunConfig{})).offsets, std::vector<int>{});
}

TEST(Config, LoadFromFile) {
  const auto path = temp_path("cfg.json");
  {
    std::ofstream out(path);
    out << R"({"model": "spin1", "L": [8, 10], "beta": "0,0.3333333333333333"})";
  }
  const auto c = load_config(path.string());
  EXPECT_EQ(c.lengths, (std::vector<int>{8, 10}));
  EXPECT_EQ(c.betas.size(), 2u);
  std::filesystem::remove(path);
}
