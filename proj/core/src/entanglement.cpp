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

#include "ldechain/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "ldechain/operators.hpp"

namespace lde {
namespace {

constexpr double kRangeSlack = 1e-12;
constexpr double kPsdTolerance = 1e-10;
constexpr double kWeightTolerance = 1e-9;

double su2_formula(double q, const char* name) {
  if (!(q >= -0.25 - kRangeSlack && q <= 0.25 + kRangeSlack)) {
    throw std::domain_error(std::string(name) + ": correlator " + std::to_string(q) + " outside [-1/4, 1/4]");
  }
  // 2|q| - q - 1/4 <= 0 for q >= -1/12; below that it is -3q - 1/4, evaluated
  // with a single rounding so the sign is exact right at the boundary
  if (q >= -1.0 / 12.0) return 0.0;
  return 2.0 * std::max(0.0, std::fma(-3.0, q, -0.25));
}

Eigen::VectorXd psd_eigenvalues(const PairDensityMatrix& rho, Eigen::MatrixXd* vectors = nullptr) {
  rho.validate();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rho.matrix);
  if (vectors) *vectors = es.eigenvectors();
  return es.eigenvalues().cwiseMax(0.0);
}

Eigen::MatrixXd partial_transpose_a(const Eigen::MatrixXd& m, int d) {
  Eigen::MatrixXd pt(m.rows(), m.cols());
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int a2 = 0; a2 < d; ++a2)
        for (int b2 = 0; b2 < d; ++b2) pt(a * d + b, a2 * d + b2) = m(a2 * d + b, a * d + b2);
  return pt;
}

Su2SectorTraces compute_traces() {
  const auto& proj = su2_projectors();
  const auto s = local_spin_matrices(SiteKind::SpinOne);
  const Eigen::MatrixXd zz = Eigen::kroneckerProduct(s.sz, s.sz);
  const Eigen::MatrixXd sz2 = s.sz * s.sz;
  const Eigen::MatrixXd charge = Eigen::kroneckerProduct(sz2, sz2);
  Su2SectorTraces t;
  for (int j = 0; j < 3; ++j) {
    t.zz[static_cast<std::size_t>(j)] = (proj[static_cast<std::size_t>(j)] * zz).trace() / (2 * j + 1);
    t.charge[static_cast<std::size_t>(j)] = (proj[static_cast<std::size_t>(j)] * charge).trace() / (2 * j + 1);
  }
  // maximally mixed state: <(S^z)^2 (S^z)^2> = (2/3)^2
  double mixed = 0.0;
  for (int j = 0; j < 3; ++j) mixed += (2 * j + 1) / 9.0 * t.charge[static_cast<std::size_t>(j)];
  if (std::abs(mixed - 4.0 / 9.0) > 1e-12) throw std::logic_error("su2 traces: maximally mixed check failed");
  return t;
}

}  // namespace

double concurrence_su2(double gamma_zz) { return su2_formula(gamma_zz, "concurrence_su2"); }

double partial_concurrence(double eta_zz) { return su2_formula(eta_zz, "partial_concurrence"); }

double concurrence_wootters(const PairDensityMatrix& rho) {
  if (rho.local_dim != 2) throw std::invalid_argument("concurrence_wootters: needs a two-qubit state");
  Eigen::MatrixXd vecs;
  const Eigen::VectorXd evals = psd_eigenvalues(rho, &vecs);
  const Eigen::MatrixXd sqrt_rho = vecs * evals.cwiseSqrt().asDiagonal() * vecs.transpose();
  // sigma^y x sigma^y is real; rho is real so rho* = rho
  Eigen::Matrix4d yy = Eigen::Matrix4d::Zero();
  yy(0, 3) = yy(3, 0) = -1.0;
  yy(1, 2) = yy(2, 1) = 1.0;
  const Eigen::MatrixXd flipped = yy * rho.matrix * yy;
  Eigen::MatrixXd r = sqrt_rho * flipped * sqrt_rho;
  r = 0.5 * (r + r.transpose()).eval();
  Eigen::VectorXd lambda = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(r, Eigen::EigenvaluesOnly)
                               .eigenvalues()
                               .cwiseMax(0.0)
                               .cwiseSqrt();
  std::sort(lambda.data(), lambda.data() + lambda.size(), std::greater<>());
  return std::clamp(lambda[0] - lambda[1] - lambda[2] - lambda[3], 0.0, 1.0);
}

double negativity(const PairDensityMatrix& rho) {
  rho.validate();
  const Eigen::MatrixXd pt = partial_transpose_a(rho.matrix, rho.local_dim);
  const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(pt, Eigen::EigenvaluesOnly).eigenvalues();
  return ev.cwiseAbs().sum() - 1.0;
}

const std::array<Eigen::MatrixXd, 3>& su2_projectors() {
  static const std::array<Eigen::MatrixXd, 3> projectors = [] {
    // S_A.S_B has eigenvalues -2, -1, +1 on total spin J = 0, 1, 2
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(two_site_matrix(OperatorKind::ExchangeOne));
    const std::array<double, 3> sector_value{-2.0, -1.0, 1.0};
    std::array<Eigen::MatrixXd, 3> p;
    for (std::size_t j = 0; j < 3; ++j) {
      p[j] = Eigen::MatrixXd::Zero(9, 9);
      int rank = 0;
      for (int i = 0; i < 9; ++i) {
        if (std::abs(es.eigenvalues()[i] - sector_value[j]) < 1e-9) {
          p[j] += es.eigenvectors().col(i) * es.eigenvectors().col(i).transpose();
          ++rank;
        }
      }
      if (rank != 2 * static_cast<int>(j) + 1) throw std::logic_error("su2 projectors: wrong multiplicity");
    }
    return p;
  }();
  return projectors;
}

const Su2SectorTraces& su2_sector_traces() {
  static const Su2SectorTraces traces = compute_traces();
  return traces;
}

Su2QutritState su2_reconstruct(double zz, double charge) {
  const auto& t = su2_sector_traces();
  Eigen::Matrix3d a;
  a << 1.0, 1.0, 1.0, t.zz[0], t.zz[1], t.zz[2], t.charge[0], t.charge[1], t.charge[2];
  const Eigen::Vector3d p = a.partialPivLu().solve(Eigen::Vector3d(1.0, zz, charge));
  Su2QutritState s;
  s.valid = p.minCoeff() >= -kWeightTolerance;
  for (int j = 0; j < 3; ++j) s.weights[static_cast<std::size_t>(j)] = s.valid ? std::max(0.0, p[j]) : p[j];
  return s;
}

PairDensityMatrix su2_density_matrix(const Su2QutritState& state) {
  if (!state.valid) throw std::domain_error("su2_density_matrix: invalid state");
  const auto& p = su2_projectors();
  PairDensityMatrix rho{3, Eigen::MatrixXd::Zero(9, 9)};
  double total = 0.0;
  for (std::size_t j = 0; j < 3; ++j) total += state.weights[j];
  for (std::size_t j = 0; j < 3; ++j) {
    rho.matrix += state.weights[j] / total / static_cast<double>(2 * j + 1) * p[j];
  }
  return rho;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Entangled: return "entangled";
    case Verdict::Separable: return "separable";
    case Verdict::InvalidState: return "invalid-state";
  }
  return "?";
}

EntanglementReport classify_su2_pair(double zz, double charge) {
  EntanglementReport r;
  r.zz = zz;
  r.charge = charge;
  r.quarter_zz = zz / 4.0;
  r.state = su2_reconstruct(zz, charge);
  if (!r.state.valid) {
    r.verdict = Verdict::InvalidState;
    return r;
  }
  r.partial_concurrence = partial_concurrence(std::clamp(r.quarter_zz, -0.25, 0.25));
  const double n = negativity(su2_density_matrix(r.state));
  r.negativity = std::max(0.0, n);
  r.verdict = n > kNegativityThreshold ? Verdict::Entangled : Verdict::Separable;
  return r;
}

}  // namespace lde
