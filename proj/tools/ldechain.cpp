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

// ldechain: parameter scans for long-distance entanglement in spin chains.
//
//   ldechain scan-dimer --L 8:24:4 --delta 0:0.9:0.1 --alpha 0.5
//   ldechain threshold --L 12 --alpha 0,0.25,0.5 --tol 1e-3
//   ldechain scan-spin1 --L 8,10,12 --beta 0.3333333333333333
//   ldechain scan-probes --L 14 --Jp 0.1,1 --d 1:7:1
//   ldechain aklt-check --L 6:12:2
//   ldechain classify --input pairs.csv      (columns zz, charge)
//   ldechain fit --input points.csv          (columns L, value)
//
// Every flag mirrors a key of the --config JSON file; flags win.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "ldechain/config.hpp"
#include "ldechain/scan.hpp"
#include "ldechain/table.hpp"

namespace {

enum ExitCode { kOk = 0, kConfigError = 1, kSolverError = 2, kIoError = 3 };

struct Flags {
  std::string config_path;
  std::map<std::string, std::string> text;  // config key -> raw flag value
  bool high_memory = false;
  bool alternating = false;
};

void add_common(CLI::App* cmd, Flags& f, std::initializer_list<const char*> grid_keys) {
  cmd->add_option("--config", f.config_path, "JSON run configuration")->check(CLI::ExistingFile);
  for (const char* key : grid_keys) {
    cmd->add_option(std::string("--") + key, f.text[key], std::string("grid for ") + key + ": x | a,b,c | start:stop:step");
  }
  cmd->add_option("--seed", f.text["seed"], "Lanczos start-vector seed");
  cmd->add_option("--k", f.text["k"], "eigenpairs per sector (0: model default)");
  cmd->add_option("--two-sz", f.text["two_sz"], "twice total S^z of the sector");
  cmd->add_option("--output,-o", f.text["output"], "output path, - for stdout");
  cmd->add_option("--format", f.text["format"], "csv or json");
  cmd->add_option("--memory-budget-mb", f.text["memory_budget_mb"], "solver memory budget");
  cmd->add_option("--workers", f.text["workers"], "grid points solved concurrently");
  cmd->add_flag("--high-memory", f.high_memory, "lift the desk-scale size caps");
}

// Builds the JSON overlay from the flags that were actually given.
nlohmann::json overlay(const CLI::App* cmd, const Flags& f) {
  static const std::map<std::string, std::string> kOptionName{{"two_sz", "--two-sz"},
                                                              {"memory_budget_mb", "--memory-budget-mb"}};
  nlohmann::json doc = nlohmann::json::object();
  for (const auto& [key, value] : f.text) {
    const auto it = kOptionName.find(key);
    const std::string name = it == kOptionName.end() ? "--" + key : it->second;
    if (cmd->get_option_no_throw(name) == nullptr || cmd->count(name) == 0) continue;
    if (key == "output" || key == "format" || key == "input") {
      doc[key] = value;
    } else if (key == "seed" || key == "k" || key == "two_sz" || key == "memory_budget_mb" || key == "workers") {
      try {
        doc[key] = std::stoll(value);
      } catch (const std::exception&) {
        throw lde::ConfigError("flag " + name + " expects an integer, got '" + value + "'");
      }
    } else if (key == "tol") {
      doc[key] = lde::parse_real_grid(value).at(0);
    } else {
      doc[key] = value;  // grid string, parsed by the config loader
    }
  }
  if (cmd->count("--high-memory")) doc["high_memory"] = true;
  if (cmd->get_option_no_throw("--alternating") && cmd->count("--alternating")) doc["alternating"] = true;
  return doc;
}

lde::RunConfig resolve(const CLI::App* cmd, const Flags& f, const std::string& model) {
  lde::RunConfig base;
  if (!f.config_path.empty()) base = lde::load_config(f.config_path);
  auto c = lde::config_from_json(overlay(cmd, f), base);
  if (c.model.empty()) c.model = model;
  return c;
}

template <class Points>
bool any_failed(const Points& points) {
  return std::any_of(points.begin(), points.end(), [](const auto& p) { return p.status.rfind("ok", 0) != 0; });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Long-distance entanglement scans for spin chains"};
  app.set_version_flag("--version", lde::tool_version());
  app.require_subcommand(1);

  Flags f;
  auto* dimer = app.add_subcommand("scan-dimer", "dimerized-frustrated spin-1/2 chain: end-to-end concurrence");
  add_common(dimer, f, {"L", "delta", "alpha"});
  auto* threshold = app.add_subcommand("threshold", "onset delta_T(alpha) of end-to-end concurrence");
  add_common(threshold, f, {"L", "alpha"});
  threshold->add_option("--tol", f.text["tol"], "bisection bracket width (>= 1e-4)");
  auto* spin1 = app.add_subcommand("scan-spin1", "bilinear-biquadratic spin-1 chain: end correlators, PC, negativity");
  add_common(spin1, f, {"L", "beta"});
  auto* probes = app.add_subcommand("scan-probes", "Heisenberg ring with two probe spins");
  add_common(probes, f, {"L", "Jp", "d"});
  auto* aklt = app.add_subcommand("aklt-check", "exact diagonalization against the AKLT end-correlator formula");
  add_common(aklt, f, {"L"});
  auto* classify = app.add_subcommand("classify", "separability of SU(2)-invariant qutrit pairs from (zz, charge)");
  add_common(classify, f, {});
  classify->add_option("--input,-i", f.text["input"], "CSV with columns zz, charge");
  auto* fit = app.add_subcommand("fit", "exponential finite-size extrapolation of (L, value) data");
  add_common(fit, f, {});
  fit->add_option("--input,-i", f.text["input"], "CSV with columns L, value");
  fit->add_flag("--alternating", f.alternating, "fit a (-1)^L correction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  CLI::App* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();
  try {
    lde::Table table;
    lde::RunConfig config;
    bool failed = false;
    if (cmd == dimer) {
      config = resolve(cmd, f, "dimer");
      const auto points = lde::scan_dimer(config);
      failed = any_failed(points);
      table = lde::dimer_table(points);
    } else if (cmd == threshold) {
      config = resolve(cmd, f, "dimer");
      table = lde::threshold_table(lde::scan_threshold(config));
    } else if (cmd == spin1) {
      config = resolve(cmd, f, "spin1");
      const auto points = lde::scan_spin1(config);
      failed = any_failed(points);
      table = lde::spin1_table(points);
    } else if (cmd == probes) {
      config = resolve(cmd, f, "probes");
      const auto points = lde::scan_probes(config);
      failed = any_failed(points);
      table = lde::probe_table(points);
    } else if (cmd == aklt) {
      config = resolve(cmd, f, "spin1");
      table = lde::aklt_check(config);
      const auto status = table.column_index("status");
      for (const auto& row : table.rows) failed |= std::get<std::string>(row[status]) != "ok";
    } else if (cmd == classify || cmd == fit) {
      config = resolve(cmd, f, "");
      if (config.input.empty()) throw lde::ConfigError(name + ": --input is required");
      const auto input = lde::read_csv(config.input);
      table = cmd == classify ? lde::classify_table(input) : lde::fit_table(input, config.alternating);
    }
    lde::emit(table, config.format, config.output, lde::run_metadata(name, config));
    return failed ? kSolverError : kOk;
  } catch (const lde::ConfigError& e) {
    std::cerr << name << ": " << e.what() << '\n';
    return kConfigError;
  } catch (const lde::SolverError& e) {
    std::cerr << name << ": " << e.what() << '\n';
    return kSolverError;
  } catch (const lde::IoError& e) {
    std::cerr << name << ": " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    std::cerr << name << ": " << e.what() << '\n';
    return kConfigError;
  } catch (const std::out_of_range& e) {
    // missing input columns
    std::cerr << name << ": " << e.what() << '\n';
    return kConfigError;
  }
}
