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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ldechain/config.hpp"
#include "ldechain/eigensolver.hpp"
#include "ldechain/entanglement.hpp"
#include "ldechain/fit.hpp"
#include "ldechain/table.hpp"

namespace lde {

/// "Nonzero concurrence" cutoff used by scans and threshold bisection.
inline constexpr double kConcurrenceEpsilon = 1e-8;

/// Desk-scale size caps; `high_memory` lifts them to the hard limits.
struct SizeCaps {
  int spin_half_length = 24;
  int spin_one_length = 16;
  int probe_ring_length = 16;
};
inline constexpr SizeCaps kDeskCaps{};
inline constexpr SizeCaps kHighMemoryCaps{30, 18, 28};

enum class ModelFamily { Dimer, Spin1, Probes };

/// Throws ConfigError when a length is outside the caps.
void check_size(ModelFamily family, int length, bool high_memory);

struct SolveSettings {
  std::uint64_t seed = 20061;
  int k = 0;  ///< 0 picks the per-model default (dimer 1, spin-1 1, probes 2)
  int two_sz = 0;
  bool high_memory = false;
  /// Dimer points: also solve the opposite spin-flip sector so the degeneracy
  /// column counts a (near-)degenerate triplet. Threshold bisection skips it.
  bool count_multiplet = true;
  LanczosOptions lanczos;
};

SolveSettings settings_from(const RunConfig& config);

struct DimerPoint {
  int length = 0;
  double delta = 0.0;
  double alpha = 0.0;
  double energy = 0.0;
  int degeneracy = 0;
  double s_tot = 0.0;
  double gamma_zz = 0.0;
  double concurrence = 0.0;
  std::string status = "ok";
};

struct Spin1Point {
  int length = 0;
  double beta = 0.0;
  double energy = 0.0;
  double s_tot = 0.0;
  double zz = 0.0;
  double charge = 0.0;
  double partial_concurrence = 0.0;
  double negativity_rdm = 0.0;
  double negativity_su2 = 0.0;
  Verdict verdict = Verdict::InvalidState;
  std::string status = "ok";
};

struct ProbePoint {
  int length = 0;  ///< ring length (probes excluded)
  int offset = 0;
  double coupling = 0.0;
  double energy = 0.0;
  double s_tot = 0.0;
  int degeneracy = 0;  ///< full multiplet size across 2S^z in {0, +2, -2}
  double gamma_zz = 0.0;
  double concurrence = 0.0;
  std::string status = "ok";
};

/// Singlet ground state of the open dimerized-frustrated chain; end-to-end
/// gamma^zz and concurrence between sites 1 and L. In 2S^z = 0 the singlet is
/// sought in its own spin-flip sector, which excludes every odd-S level. `basis` may be shared
/// across calls with the same L and sector.
DimerPoint solve_dimer_point(int length, double delta, double alpha, const SolveSettings& settings,
                             SectorBasisPtr basis = nullptr);

/// Singlet ground state of the open spin-1 chain; end-to-end correlators,
/// partial concurrence, and negativity both from the 9x9 reduced state and
/// from the SU(2) reconstruction.
Spin1Point solve_spin1_point(int length, double beta, const SolveSettings& settings, SectorBasisPtr basis = nullptr);

/// Lowest state of the ring-plus-probes model in 2S^z = 0, with its total
/// spin, the multiplet size and the probe-probe concurrence.
ProbePoint solve_probe_point(int length, int offset, double coupling, const SolveSettings& settings,
                             SectorBasisPtr basis = nullptr);

struct ThresholdResult {
  enum class Status { Found, NoThreshold, BelowRange };
  double alpha = 0.0;
  int length = 0;
  double delta_t = 0.0;
  double bracket_width = 0.0;
  int evaluations = 0;
  Status status = Status::Found;
};

std::string_view to_string(ThresholdResult::Status status);

inline constexpr double kThresholdUpperDelta = 0.99;

/// Bisection on delta in (0, 0.99) for the onset of end-to-end concurrence
/// (C > 1e-8). The bracket keeps C = 0 on the left and C > 0 on the right;
/// `observer` sees it after every narrowing step.
using BracketObserver = std::function<void(double lo, double hi)>;
ThresholdResult find_threshold(double alpha, int length, double tol, const SolveSettings& settings,
                               const BracketObserver& observer = {});

std::vector<DimerPoint> scan_dimer(const RunConfig& config);
std::vector<Spin1Point> scan_spin1(const RunConfig& config);
std::vector<ProbePoint> scan_probes(const RunConfig& config);
std::vector<ThresholdResult> scan_threshold(const RunConfig& config);

Table dimer_table(const std::vector<DimerPoint>& points);
Table spin1_table(const std::vector<Spin1Point>& points);
Table probe_table(const std::vector<ProbePoint>& points);
Table threshold_table(const std::vector<ThresholdResult>& results);

/// Exact diagonalization at beta = 1/3 against the asymptotic AKLT formula.
Table aklt_check(const RunConfig& config);

/// Reads (zz, charge) columns and appends reconstruction weights, PC, N and verdict.
Table classify_table(const Table& input);

/// Reads (L, value) columns and returns a one-row fit summary.
Table fit_table(const Table& input, bool alternating);

/// Run metadata attached to JSON output.
nlohmann::json run_metadata(const std::string& command, const RunConfig& config);

std::string tool_version();

}  // namespace lde
