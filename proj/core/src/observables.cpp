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

#include "ldechain/observables.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

namespace lde {
namespace {

void check_site(const SectorBasis& b, int site) {
  if (site < 0 || site >= b.length()) {
    throw std::out_of_range("observables: site " + std::to_string(site) + " outside [0, " +
                            std::to_string(b.length()) + ")");
  }
}

const SectorBasis& require_basis(const Wavefunction& psi) {
  if (!psi.basis) throw std::invalid_argument("observables: wavefunction has no basis");
  return *psi.basis;
}

}  // namespace

double local_value(SiteKind kind, int digit, SiteObservable op) {
  // sigma^z = 2 S^z for spin-1/2, S^z for spin-1: twice-S^z / (d - 1)
  const double z = static_cast<double>(two_sz_of_digit(kind, digit)) / (local_dim(kind) - 1);
  return op == SiteObservable::Z ? z : z * z;
}

double diagonal_correlator(const Wavefunction& psi, SiteObservable op_a, int site_a, SiteObservable op_b,
                           int site_b) {
  const SectorBasis& b = require_basis(psi);
  check_site(b, site_a);
  check_site(b, site_b);
  const int d = b.local_dimension();
  double table[3][3] = {};
  for (int x = 0; x < d; ++x) {
    for (int y = 0; y < d; ++y) {
      table[x][y] = local_value(b.site_kind(), x, op_a) * local_value(b.site_kind(), y, op_b);
    }
  }
  const auto states = b.states();
  double acc = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const double p = psi.amplitudes[static_cast<Eigen::Index>(i)];
    acc += p * p * table[b.digit(states[i], site_a)][b.digit(states[i], site_b)];
  }
  return acc / psi.amplitudes.squaredNorm();
}

CorrelatorSet correlators(const Wavefunction& psi, int site_a, int site_b) {
  CorrelatorSet out;
  out.site_a = site_a;
  out.site_b = site_b;
  out.zz = diagonal_correlator(psi, SiteObservable::Z, site_a, SiteObservable::Z, site_b);
  out.charge = diagonal_correlator(psi, SiteObservable::ZSquared, site_a, SiteObservable::ZSquared, site_b);
  return out;
}

void PairDensityMatrix::validate() const {
  const Eigen::Index n = static_cast<Eigen::Index>(local_dim) * local_dim;
  if (matrix.rows() != n || matrix.cols() != n) throw std::domain_error("density matrix: wrong shape");
  if (std::abs(matrix.trace() - 1.0) > 1e-12) {
    throw std::domain_error("density matrix: trace " + std::to_string(matrix.trace()) + " != 1");
  }
  if ((matrix - matrix.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::domain_error("density matrix: not symmetric");
  }
  const double lowest = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(matrix, Eigen::EigenvaluesOnly)
                            .eigenvalues()[0];
  if (lowest < -1e-10) {
    throw std::domain_error("density matrix: negative eigenvalue " + std::to_string(lowest));
  }
}

double PairDensityMatrix::expectation(const Eigen::MatrixXd& op_a, const Eigen::MatrixXd& op_b) const {
  const Eigen::MatrixXd op = Eigen::kroneckerProduct(op_a, op_b);
  return (matrix * op).trace();
}

PairDensityMatrix pair_density_matrix(const Wavefunction& psi, int site_a, int site_b) {
  const SectorBasis& b = require_basis(psi);
  check_site(b, site_a);
  check_site(b, site_b);
  if (site_a == site_b) throw std::invalid_argument("density matrix: sites must be distinct");
  const int d = b.local_dimension();
  const auto w_a = static_cast<std::int64_t>(b.place_value(site_a));
  const auto w_b = static_cast<std::int64_t>(b.place_value(site_b));

  PairDensityMatrix rho{d, Eigen::MatrixXd::Zero(d * d, d * d)};
  const auto states = b.states();
  const double inv_norm = 1.0 / psi.amplitudes.squaredNorm();
  for (std::size_t i = 0; i < states.size(); ++i) {
    const Config c = states[i];
    const int a = b.digit(c, site_a);
    const int bb = b.digit(c, site_b);
    const double amp = psi.amplitudes[static_cast<Eigen::Index>(i)];
    if (amp == 0.0) continue;
    // rho[(a,b),(a',b')] += psi(a,b,rest) psi(a',b',rest); only equal-S^z pairs survive
    for (int a2 = 0; a2 < d; ++a2) {
      const int b2 = a + bb - a2;
      if (b2 < 0 || b2 >= d) continue;
      const Config c2 = static_cast<Config>(static_cast<std::int64_t>(c) + (a2 - a) * w_a + (b2 - bb) * w_b);
      const std::size_t j = b.find(c2);
      if (j == SectorBasis::npos) continue;
      rho.matrix(a * d + bb, a2 * d + b2) += amp * psi.amplitudes[static_cast<Eigen::Index>(j)];
    }
  }
  rho.matrix *= inv_norm;
  return rho;
}

}  // namespace lde
