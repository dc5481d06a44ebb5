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

#include "ldechain/operators.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace lde {
namespace {

Eigen::MatrixXd exchange(SiteKind kind) {
  const auto s = local_spin_matrices(kind);
  Eigen::MatrixXd zz = Eigen::kroneckerProduct(s.sz, s.sz);
  Eigen::MatrixXd pm = Eigen::kroneckerProduct(s.splus, s.sminus);
  Eigen::MatrixXd mp = Eigen::kroneckerProduct(s.sminus, s.splus);
  return zz + 0.5 * (pm + mp);
}

}  // namespace

std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::ExchangeHalf: return "EXCHANGE_HALF";
    case OperatorKind::ExchangeOne: return "EXCHANGE_ONE";
    case OperatorKind::BiquadOne: return "BIQUAD_ONE";
  }
  return "?";
}

SiteKind site_kind_of(OperatorKind kind) {
  return kind == OperatorKind::ExchangeHalf ? SiteKind::SpinHalf : SiteKind::SpinOne;
}

LocalSpinMatrices local_spin_matrices(SiteKind kind) {
  const int d = local_dim(kind);
  const double spin = 0.5 * (d - 1);
  LocalSpinMatrices out{Eigen::MatrixXd::Zero(d, d), Eigen::MatrixXd::Zero(d, d),
                        Eigen::MatrixXd::Zero(d, d)};
  for (int a = 0; a < d; ++a) {
    const double m = a - spin;
    out.sz(a, a) = m;
    if (a + 1 < d) {
      out.splus(a + 1, a) = std::sqrt(spin * (spin + 1.0) - m * (m + 1.0));
    }
  }
  out.sminus = out.splus.transpose();
  return out;
}

const Eigen::MatrixXd& two_site_matrix(OperatorKind kind) {
  static const Eigen::MatrixXd pauli_exchange = 4.0 * exchange(SiteKind::SpinHalf);
  static const Eigen::MatrixXd spin1_exchange = exchange(SiteKind::SpinOne);
  static const Eigen::MatrixXd spin1_biquad = spin1_exchange * spin1_exchange;
  switch (kind) {
    case OperatorKind::ExchangeHalf: return pauli_exchange;
    case OperatorKind::ExchangeOne: return spin1_exchange;
    case OperatorKind::BiquadOne: return spin1_biquad;
  }
  throw std::invalid_argument("unknown operator kind");
}

}  // namespace lde
