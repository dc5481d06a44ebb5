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

#include "ldechain/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace lde {
namespace {

double to_real(std::string_view s) {
  std::string text(s);
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("expected a number, got '" + text + "'");
  }
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<double> real_grid(const nlohmann::json& v, const char* key) {
  if (v.is_number()) return {v.get<double>()};
  if (v.is_string()) return parse_real_grid(v.get<std::string>());
  if (v.is_array()) {
    std::vector<double> out;
    for (const auto& x : v) {
      if (!x.is_number()) throw ConfigError(std::string("config: '") + key + "' must hold numbers");
      out.push_back(x.get<double>());
    }
    if (out.empty()) throw ConfigError(std::string("config: '") + key + "' grid is empty");
    return out;
  }
  throw ConfigError(std::string("config: '") + key + "' must be a number, array or range string");
}

std::vector<int> int_grid(const nlohmann::json& v, const char* key) {
  std::vector<int> out;
  for (double x : real_grid(v, key)) {
    if (x != std::round(x)) throw ConfigError(std::string("config: '") + key + "' must hold integers");
    out.push_back(static_cast<int>(x));
  }
  return out;
}

}  // namespace

std::vector<double> parse_real_grid(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ConfigError("empty grid");
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ConfigError("range grid must be start:stop:step, got '" + std::string(text) + "'");
    const double start = to_real(trim(parts[0]));
    const double stop = to_real(trim(parts[1]));
    const double step = to_real(trim(parts[2]));
    if (!(step > 0.0) || stop < start) throw ConfigError("range grid needs step > 0 and stop >= start");
    const auto count = static_cast<long long>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> out;
    for (long long i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
    return out;
  }
  std::vector<double> out;
  for (auto part : split(text, ',')) out.push_back(to_real(trim(part)));
  return out;
}

std::vector<int> parse_int_grid(std::string_view text) {
  std::vector<int> out;
  for (double x : parse_real_grid(text)) {
    if (x != std::round(x)) throw ConfigError("integer grid has a non-integer entry");
    out.push_back(static_cast<int>(std::lround(x)));
  }
  return out;
}

RunConfig config_from_json(const nlohmann::json& doc, RunConfig c) {
  if (!doc.is_object()) throw ConfigError("config: top level must be a JSON object");
  try {
    for (const auto& [key, v] : doc.items()) {
      if (key == "model") c.model = v.get<std::string>();
      else if (key == "L") c.lengths = v.is_array() && v.empty() ? std::vector<int>{} : int_grid(v, "L");
      else if (key == "delta") c.deltas = real_grid(v, "delta");
      else if (key == "alpha") c.alphas = real_grid(v, "alpha");
      else if (key == "beta") c.betas = real_grid(v, "beta");
      else if (key == "Jp") c.couplings = real_grid(v, "Jp");
      else if (key == "d") c.offsets = v.is_array() && v.empty() ? std::vector<int>{} : int_grid(v, "d");
      else if (key == "two_sz") c.two_sz = v.get<int>();
      else if (key == "seed") c.seed = v.get<std::uint64_t>();
      else if (key == "k") c.k = v.get<int>();
      else if (key == "output") c.output = v.get<std::string>();
      else if (key == "format") c.format = parse_format(v.get<std::string>());
      else if (key == "memory_budget_mb") c.memory_budget_mb = v.get<std::size_t>();
      else if (key == "high_memory") c.high_memory = v.get<bool>();
      else if (key == "workers") c.workers = v.get<int>();
      else if (key == "tol") c.tolerance = v.get<double>();
      else if (key == "alternating") c.alternating = v.get<bool>();
      else if (key == "input") c.input = v.get<std::string>();
      else throw ConfigError("config: unknown key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (c.workers < 1) throw ConfigError("config: workers must be >= 1");
  if (c.k < 0) throw ConfigError("config: k must be >= 0");
  return c;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config '" + path + "': " + e.what());
  }
  return config_from_json(doc, std::move(base));
}

nlohmann::json config_to_json(const RunConfig& c) {
  return {
      {"model", c.model},
      {"L", c.lengths},
      {"delta", c.deltas},
      {"alpha", c.alphas},
      {"beta", c.betas},
      {"Jp", c.couplings},
      {"d", c.offsets},
      {"two_sz", c.two_sz},
      {"seed", c.seed},
      {"k", c.k},
      {"output", c.output},
      {"format", std::string(to_string(c.format))},
      {"memory_budget_mb", c.memory_budget_mb},
      {"high_memory", c.high_memory},
      {"workers", c.workers},
      {"tol", c.tolerance},
      {"alternating", c.alternating},
      {"input", c.input},
  };
}

}  // namespace lde
