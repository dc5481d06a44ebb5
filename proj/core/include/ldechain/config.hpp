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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ldechain/table.hpp"

namespace lde {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One reproducible run. JSON keys: model, L, delta, alpha, beta, Jp, d,
/// two_sz, seed, k, output, format, memory_budget_mb, high_memory, workers,
/// tol, alternating, input. Grids accept a number, an array, or a string
/// "a,b,c" / "start:stop:step".
struct RunConfig {
  std::string model;
  std::vector<int> lengths;
  std::vector<double> deltas{0.0};
  std::vector<double> alphas{0.0};
  std::vector<double> betas{0.0};
  std::vector<double> couplings{1.0};
  std::vector<int> offsets;  ///< empty: every d in [1, L/2]
  int two_sz = 0;
  std::uint64_t seed = 20061;
  int k = 0;  ///< 0 picks the per-model default
  std::string output = "-";
  OutputFormat format = OutputFormat::Csv;
  std::size_t memory_budget_mb = 1536;
  bool high_memory = false;
  int workers = 1;
  double tolerance = 1e-3;
  bool alternating = false;
  std::string input;
};

/// Overlays the keys present in `doc` onto `base`. Throws ConfigError.
RunConfig config_from_json(const nlohmann::json& doc, RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});
nlohmann::json config_to_json(const RunConfig& config);

std::vector<double> parse_real_grid(std::string_view text);
std::vector<int> parse_int_grid(std::string_view text);

}  // namespace lde
