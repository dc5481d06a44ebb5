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

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <string_view>

#include "ldechain/observables.hpp"

namespace lde {

/// Two-qubit concurrence of an SU(2)-invariant, unmagnetized state from its
/// gamma^zz = <s^z_A s^z_B>/4: C = 2 max{0, 2|gamma| - gamma - 1/4}.
/// Positive exactly when gamma < -1/12. Throws for gamma outside [-1/4, 1/4].
double concurrence_su2(double gamma_zz);

/// Wootters concurrence of a two-qubit density matrix.
double concurrence_wootters(const PairDensityMatrix& rho);

/// Concurrence between the constituent spin-1/2 of two spin-1 sites,
/// eta^zz = <S^z_A S^z_B>/4. Same formula as concurrence_su2.
double partial_concurrence(double eta_zz);

/// ||rho^{T_A}||_1 - 1 (raw, may be ~0 or slightly negative for separable states).
double negativity(const PairDensityMatrix& rho);

/// SU(2)-invariant two-qutrit state sum_J p_J P_J / (2J + 1).
struct Su2QutritState {
  std::array<double, 3> weights{};  ///< p0, p1, p2 (clipped at 0 when valid)
  bool valid = false;
};

/// Per-sector traces Tr[P_J O] / (2J + 1) for O = S^z S^z and (S^z)^2 (S^z)^2,
/// computed from explicitly built total-spin projectors.
struct Su2SectorTraces {
  std::array<double, 3> zz{};
  std::array<double, 3> charge{};
};

const Su2SectorTraces& su2_sector_traces();

/// Total-spin projectors P_0, P_1, P_2 on two spin-1 sites (9 x 9).
const std::array<Eigen::MatrixXd, 3>& su2_projectors();

Su2QutritState su2_reconstruct(double zz, double charge);

/// 9 x 9 density matrix of a reconstructed state.
PairDensityMatrix su2_density_matrix(const Su2QutritState& state);

enum class Verdict { Entangled, Separable, InvalidState };

std::string_view to_string(Verdict verdict);

struct EntanglementReport {
  double zz = 0.0;
  double charge = 0.0;
  double quarter_zz = 0.0;  ///< gamma^zz or eta^zz
  std::optional<double> concurrence;
  double partial_concurrence = 0.0;
  double negativity = 0.0;  ///< max(0, raw)
  Su2QutritState state;
  Verdict verdict = Verdict::InvalidState;
};

/// Entanglement threshold on the negativity.
inline constexpr double kNegativityThreshold = 1e-12;

/// Separability of a globally SU(2)-invariant qutrit pair from its two
/// diagonal correlators; positive negativity is necessary and sufficient.
EntanglementReport classify_su2_pair(double zz, double charge);

}  // namespace lde
