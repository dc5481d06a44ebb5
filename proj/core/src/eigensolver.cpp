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

#include "ldechain/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace lde {
namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

std::span<double> as_span(double* data, Index n) { return {data, static_cast<std::size_t>(n)}; }

// Two passes of classical Gram-Schmidt against the leading `cols` columns.
void project_out(const MatrixXd& basis, Index cols, VectorXd& w, VectorXd* coefficients = nullptr) {
  if (cols == 0) return;
  const auto b = basis.leftCols(cols);
  VectorXd h = b.transpose() * w;
  w.noalias() -= b * h;
  VectorXd h2 = b.transpose() * w;
  w.noalias() -= b * h2;
  if (coefficients) *coefficients = h + h2;
}

// V(:, 0:keep) <- V(:, 0:n) * Y(:, 0:keep), in row blocks to avoid a full temporary.
void rotate_columns(MatrixXd& v, Index n, const MatrixXd& y, Index keep) {
  constexpr Index kBlock = 4096;
  MatrixXd tmp;
  for (Index r = 0; r < v.rows(); r += kBlock) {
    const Index rows = std::min(kBlock, v.rows() - r);
    tmp.noalias() = v.block(r, 0, rows, n) * y.topLeftCorner(n, keep);
    v.block(r, 0, rows, keep) = tmp;
  }
}

struct SingleResult {
  double value;
  VectorXd vector;
  double residual;
  int iterations;
};

SingleResult lowest_in_complement(const LinearMap& op, std::size_t dim, const MatrixXd& locked, Index n_locked,
                                  std::uint64_t seed, int krylov, int eigenpair, const LanczosOptions& opt) {
  const auto n = static_cast<Index>(dim);
  const Index m = std::min<Index>(krylov, n - n_locked);
  MatrixXd v(n, m + 1);
  MatrixXd t = MatrixXd::Zero(m + 1, m + 1);
  VectorXd w(n);

  {
    VectorXd v0 = random_unit_vector(dim, seed);
    if (opt.constraint) opt.constraint(as_span(v0.data(), n));
    project_out(locked, n_locked, v0);
    if (v0.norm() < 1e-8) throw std::invalid_argument("lanczos: start vector vanishes in the constrained subspace");
    v0.normalize();
    v.col(0) = v0;
  }

  Index start = 0;
  int iterations = 0;
  double theta_prev = std::numeric_limits<double>::infinity();
  double best_residual = std::numeric_limits<double>::infinity();
  Eigen::SelfAdjointEigenSolver<MatrixXd> ritz;

  while (true) {
    for (Index j = start; j < m; ++j) {
      op(as_span(v.col(j).data(), n), as_span(w.data(), n));
      ++iterations;
      if (opt.constraint) opt.constraint(as_span(w.data(), n));
      VectorXd h;
      project_out(v, j + 1, w, &h);
      project_out(locked, n_locked, w);
      t.block(0, j, j + 1, 1) = h;
      t.block(j, 0, 1, j + 1) = h.transpose();
      const double beta = w.norm();

      const Index size = j + 1;
      ritz.compute(t.topLeftCorner(size, size));
      const double theta = ritz.eigenvalues()[0];
      const double scale = std::max(1.0, std::abs(theta));
      const double residual = std::abs(beta * ritz.eigenvectors()(size - 1, 0));
      best_residual = std::min(best_residual, residual);
      if (opt.observer) opt.observer(eigenpair, iterations, theta);

      const bool exhausted = beta <= 1e-12 * scale || size == n - n_locked;
      const bool converged = residual <= opt.residual_tolerance * scale &&
                             std::abs(theta - theta_prev) <= opt.ritz_change_tolerance * scale;
      theta_prev = theta;
      if (exhausted || converged) {
        VectorXd x = v.leftCols(size) * ritz.eigenvectors().col(0);
        project_out(locked, n_locked, x);
        x.normalize();
        return {theta, std::move(x), residual, iterations};
      }
      if (iterations >= opt.max_iterations) {
        std::ostringstream msg;
        msg << "lanczos: eigenpair " << eigenpair << " not converged after " << iterations
            << " iterations (best residual " << best_residual << ")";
        throw SolverError(msg.str(), {best_residual});
      }
      v.col(j + 1) = w / beta;
    }

    // thick restart: keep the lowest half of the Ritz vectors plus the residual direction
    ritz.compute(t.topLeftCorner(m, m));
    const Index keep = std::clamp<Index>(m / 2, 1, m - 1);
    rotate_columns(v, m, ritz.eigenvectors(), keep);
    v.col(keep) = v.col(m);
    t.setZero();
    for (Index i = 0; i < keep; ++i) t(i, i) = ritz.eigenvalues()[i];
    start = keep;
  }
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Eigenpairs lanczos_lowest(const LinearMap& op, std::size_t dim, int k, std::uint64_t seed,
                          const LanczosOptions& options) {
  if (k < 1) throw std::invalid_argument("lanczos: k must be >= 1");
  if (static_cast<std::size_t>(k) > dim) {
    throw std::invalid_argument("lanczos: k = " + std::to_string(k) + " exceeds the dimension " +
                                std::to_string(dim));
  }
  if (options.max_krylov < 3) throw std::invalid_argument("lanczos: max_krylov must be >= 3");
  const auto n = static_cast<Index>(dim);
  const std::size_t bytes_per_vector = sizeof(double) * dim;
  // locked vectors, their images and two work vectors come out of the budget first
  const auto affordable = static_cast<long long>(options.memory_budget_bytes / bytes_per_vector) - 2 * k - 3;
  const int krylov =
      static_cast<int>(std::clamp<long long>(affordable, std::min(8, options.max_krylov), options.max_krylov));

  MatrixXd locked(n, k);
  Eigenpairs out;
  for (int p = 0; p < k; ++p) {
    auto single = lowest_in_complement(op, dim, locked, p, derive_seed(seed, static_cast<std::uint64_t>(p)),
                                       krylov, p, options);
    locked.col(p) = single.vector;
    out.iterations += single.iterations;
  }

  // Rayleigh-Ritz over the locked span: orders the pairs and yields true residuals.
  MatrixXd image(n, k);
  for (int p = 0; p < k; ++p) {
    op(as_span(locked.col(p).data(), n), as_span(image.col(p).data(), n));
  }
  out.iterations += k;
  MatrixXd projected = locked.transpose() * image;
  projected = 0.5 * (projected + projected.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<MatrixXd> small(projected);
  rotate_columns(locked, k, small.eigenvectors(), k);
  rotate_columns(image, k, small.eigenvectors(), k);
  out.values.assign(small.eigenvalues().data(), small.eigenvalues().data() + k);
  for (int p = 0; p < k; ++p) {
    out.residuals.push_back((image.col(p) - out.values[static_cast<std::size_t>(p)] * locked.col(p)).norm());
  }
  out.vectors = std::move(locked);
  return out;
}

double total_spin_from_s_squared(double s_squared) {
  const double s = 0.5 * (-1.0 + std::sqrt(std::max(0.0, 1.0 + 4.0 * s_squared)));
  return 0.5 * std::round(2.0 * s) + 0.0;  // + 0.0 turns -0 into 0
}

int singlet_flip_parity(SiteKind kind, int length) {
  if (length % 2 != 0) throw std::invalid_argument("singlet_flip_parity: needs an even chain");
  if (kind == SiteKind::SpinOne) return 1;
  return (length / 2) % 2 == 0 ? 1 : -1;
}

double s_tot_squared_expectation(const Wavefunction& psi) {
  if (!psi.basis) throw std::invalid_argument("s_tot_squared: wavefunction has no basis");
  const SectorBasis& b = *psi.basis;
  HamiltonianOperator s2(build_total_spin_pairs(b.site_kind(), b.length()), psi.basis,
                         total_spin_constant(b.site_kind(), b.length()));
  return psi.amplitudes.dot(s2.apply(psi.amplitudes)) / psi.amplitudes.squaredNorm();
}

GroundMultiplet lowest_eigenpairs(const BondList& bonds, SectorBasisPtr basis, int k, std::uint64_t seed,
                                  const LanczosOptions& options) {
  HamiltonianOperator h(bonds, basis);
  const LinearMap op = [&h](std::span<const double> in, std::span<double> out) { h.apply(in, out); };

  LanczosOptions solver_options = options;
  std::vector<std::uint32_t> partner;
  if (options.spin_flip_parity != 0) {
    if (options.spin_flip_parity != 1 && options.spin_flip_parity != -1) {
      throw std::invalid_argument("spin_flip_parity must be -1, 0 or +1");
    }
    if (basis->two_sz_total() != 0) throw std::invalid_argument("spin_flip_parity needs the 2S^z = 0 sector");
    partner.resize(basis->size());
    for (std::size_t i = 0; i < basis->size(); ++i) {
      partner[i] = static_cast<std::uint32_t>(basis->find(basis->flipped(basis->state_at(i))));
    }
    const double sign = options.spin_flip_parity;
    solver_options.constraint = [&partner, sign, user = options.constraint](std::span<double> v) {
      // v <- (v + sign * F v) / 2, pairing each state with its flipped partner
      for (std::size_t i = 0; i < v.size(); ++i) {
        const std::size_t j = partner[i];
        if (j < i) continue;
        if (j == i) {
          v[i] *= 0.5 * (1.0 + sign);
        } else {
          const double a = v[i];
          const double b = v[j];
          v[i] = 0.5 * (a + sign * b);
          v[j] = 0.5 * (b + sign * a);
        }
      }
      if (user) user(v);
    };
  }
  Eigenpairs pairs = lanczos_lowest(op, h.dimension(), k, seed, solver_options);

  GroundMultiplet result;
  result.seed = seed;
  result.iterations = pairs.iterations;
  result.eigenvalues = pairs.values;
  result.residuals = pairs.residuals;

  const double e0 = pairs.values.front();
  const auto within = [&](double a, double b) {
    return std::abs(a - b) <= options.degeneracy_tolerance * std::max(1.0, std::abs(b));
  };
  result.degeneracy = static_cast<int>(
      std::count_if(pairs.values.begin(), pairs.values.end(), [&](double e) { return within(e, e0); }));

  result.s_tot_squared.assign(static_cast<std::size_t>(k), std::numeric_limits<double>::quiet_NaN());
  if (options.resolve_total_spin) {
    HamiltonianOperator s2(build_total_spin_pairs(basis->site_kind(), basis->length()), basis,
                           total_spin_constant(basis->site_kind(), basis->length()));
    // walk groups of consecutive (near-)equal eigenvalues
    for (int first = 0; first < k;) {
      int last = first + 1;
      while (last < k && within(pairs.values[static_cast<std::size_t>(last)],
                                pairs.values[static_cast<std::size_t>(last - 1)])) {
        ++last;
      }
      const int g = last - first;
      MatrixXd images(pairs.vectors.rows(), g);
      for (int i = 0; i < g; ++i) images.col(i) = s2.apply(VectorXd(pairs.vectors.col(first + i)));
      MatrixXd m = pairs.vectors.middleCols(first, g).transpose() * images;
      m = 0.5 * (m + m.transpose()).eval();
      Eigen::SelfAdjointEigenSolver<MatrixXd> spin(m);
      if (g > 1) {
        MatrixXd rotated = pairs.vectors.middleCols(first, g) * spin.eigenvectors();
        pairs.vectors.middleCols(first, g) = rotated;
      }
      for (int i = 0; i < g; ++i) result.s_tot_squared[static_cast<std::size_t>(first + i)] = spin.eigenvalues()[i];
      first = last;
    }
  }

  for (int p = 0; p < k; ++p) {
    result.eigenvectors.emplace_back(basis, VectorXd(pairs.vectors.col(p)));
  }
  return result;
}

MultipletReport aggregate_multiplet(const BondList& bonds, std::span<const int> two_sz_sectors,
                                    std::span<const int> levels_per_sector, std::uint64_t seed,
                                    double energy_window, const LanczosOptions& options) {
  if (two_sz_sectors.size() != levels_per_sector.size() || two_sz_sectors.empty()) {
    throw std::invalid_argument("multiplet: need one level count per sector");
  }
  LanczosOptions quiet = options;
  quiet.resolve_total_spin = false;
  MultipletReport report;
  for (std::size_t s = 0; s < two_sz_sectors.size(); ++s) {
    auto basis = make_sector(bonds.site_kind(), bonds.length(), two_sz_sectors[s]);
    const int k = std::min<int>(levels_per_sector[s], static_cast<int>(basis->size()));
    const auto pairs = lowest_eigenpairs(bonds, basis, k, derive_seed(seed, 1000 + s), quiet);
    for (double e : pairs.eigenvalues) report.levels.push_back({two_sz_sectors[s], e});
  }
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& l : report.levels) lo = std::min(lo, l.energy);
  double hi = lo;
  for (const auto& l : report.levels) {
    if (l.energy - lo <= energy_window) {
      ++report.multiplicity;
      hi = std::max(hi, l.energy);
    }
  }
  report.ground_energy = lo;
  report.spread = hi - lo;
  return report;
}

}  // namespace lde
