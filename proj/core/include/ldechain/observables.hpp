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

#include "ldechain/wavefunction.hpp"

namespace lde {

/// Diagonal single-site operators. `Z` is sigma^z on spin-1/2 sites (values
/// +-1) and S^z on spin-1 sites (values -1, 0, +1); `ZSquared` is its square.
enum class SiteObservable { Z, ZSquared };

double local_value(SiteKind kind, int digit, SiteObservable op);

/// sum_config |psi|^2 m_A m_B, normalized by <psi|psi>.
double diagonal_correlator(const Wavefunction& psi, SiteObservable op_a, int site_a, SiteObservable op_b,
                           int site_b);

/// End-to-end style correlator bundle for one site pair.
struct CorrelatorSet {
  int site_a = 0;
  int site_b = 0;
  double zz = 0.0;      ///< <s^z s^z> (Pauli) or <S^z S^z> (spin-1)
  double charge = 0.0;  ///< <(S^z)^2 (S^z)^2>; 1 for spin-1/2
  /// gamma^zz (Pauli) or eta^zz (spin-1): zz / 4
  double quarter_zz() const noexcept { return zz / 4.0; }
};

CorrelatorSet correlators(const Wavefunction& psi, int site_a, int site_b);

/// Two-site reduced density matrix, indexed (a * d + b) with a the digit of
/// site A. Real symmetric for real wavefunctions.
struct PairDensityMatrix {
  int local_dim = 2;
  Eigen::MatrixXd matrix;

  /// Throws std::domain_error if trace, symmetry or positivity fail the
  /// tolerances (1e-12, 1e-12, -1e-10).
  void validate() const;

  /// Tr[rho (op_a x op_b)]
  double expectation(const Eigen::MatrixXd& op_a, const Eigen::MatrixXd& op_b) const;
};

PairDensityMatrix pair_density_matrix(const Wavefunction& psi, int site_a, int site_b);

}  // namespace lde
