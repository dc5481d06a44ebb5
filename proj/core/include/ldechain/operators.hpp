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

#include <string_view>

#include "ldechain/sector_basis.hpp"

namespace lde {

/// Two-site interaction terms. Each is realized as a dense real symmetric
/// (d^2 x d^2) matrix indexed by (digit_i * d + digit_j).
enum class OperatorKind {
  ExchangeHalf,  ///< sigma_i . sigma_j on two spin-1/2 sites (Pauli convention)
  ExchangeOne,   ///< S_i . S_j on two spin-1 sites
  BiquadOne,     ///< (S_i . S_j)^2 on two spin-1 sites
};

std::string_view to_string(OperatorKind kind);

SiteKind site_kind_of(OperatorKind kind);

const Eigen::MatrixXd& two_site_matrix(OperatorKind kind);

/// Single-site S^z, S^+ and S^- in the digit basis (spin units, not Pauli).
struct LocalSpinMatrices {
  Eigen::MatrixXd sz;
  Eigen::MatrixXd splus;
  Eigen::MatrixXd sminus;
};

LocalSpinMatrices local_spin_matrices(SiteKind kind);

}  // namespace lde
