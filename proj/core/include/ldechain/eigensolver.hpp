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

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ldechain/model.hpp"
#include "ldechain/wavefunction.hpp"

namespace lde {

struct LanczosOptions {
  /// Operator applications allowed per eigenpair before giving up.
  int max_iterations = 1000;
  /// Upper bound on the Krylov basis size between restarts; the memory
  /// budget may lower it further.
  int max_krylov = 100;
  std::size_t memory_budget_bytes = std::size_t{1536} << 20;
  /// Residual ||Hv - Ev|| must drop below this times max(1, |E|).
  double residual_tolerance = 1e-10;
  /// Relative change of the target Ritz value between checks.
  double ritz_change_tolerance = 1e-13;
  /// Relative energy window defining a degenerate group.
  double degeneracy_tolerance = 1e-9;
  /// Rotate degenerate groups onto S_tot^2 eigenvectors.
  bool resolve_total_spin = true;
  /// Projector onto an invariant subspace of the operator, applied in place
  /// to the start vector and to every new Krylov direction so roundoff cannot
  /// drift into excluded symmetry sectors.
  std::function<void(std::span<double>)> constraint;
  /// lowest_eigenpairs only, 2S^z = 0 sectors: keep states with this
  /// eigenvalue (+1 or -1) of the global spin flip. 0 disables.
  int spin_flip_parity = 0;
  /// Called after every operator application with the lowest current Ritz
  /// value of the eigenpair being sought.
  std::function<void(int eigenpair, int iteration, double ritz)> observer;
};

class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, std::vector<double> best_residuals)
      : std::runtime_error(what), best_residuals_(std::move(best_residuals)) {}
  const std::vector<double>& best_residuals() const noexcept { return best_residuals_; }

 private:
  std::vector<double> best_residuals_;
};

using LinearMap = std::function<void(std::span<const double>, std::span<double>)>;

struct Eigenpairs {
  std::vector<double> values;   ///< ascending
  Eigen::MatrixXd vectors;      ///< one orthonormal column per value
  std::vector<double> residuals;
  int iterations = 0;           ///< total operator applications
};

/// Lowest `k` eigenpairs of a real symmetric operator.
///
/// Thick-restart Lanczos with full (twice-iterated Gram-Schmidt)
/// reorthogonalization. Eigenpairs are found one at a time; each search runs
/// in the orthogonal complement of those already locked and starts from its
/// own seeded random vector, so exactly degenerate levels are all recovered.
Eigenpairs lanczos_lowest(const LinearMap& op, std::size_t dim, int k, std::uint64_t seed,
                          const LanczosOptions& options = {});

struct GroundMultiplet {
  std::vector<double> eigenvalues;
  std::vector<Wavefunction> eigenvectors;
  int degeneracy = 0;
  /// <S_tot^2> per eigenvector, in spin units (S(S+1)).
  std::vector<double> s_tot_squared;
  std::vector<double> residuals;
  std::uint64_t seed = 0;
  int iterations = 0;
};

GroundMultiplet lowest_eigenpairs(const BondList& bonds, SectorBasisPtr basis, int k, std::uint64_t seed,
                                  const LanczosOptions& options = {});

/// Spin-flip eigenvalue of the total singlet on an even chain in 2S^z = 0:
/// (-1)^(L/2) for Pauli spins, +1 for spin-1. States of total spin S carry
/// this times (-1)^S, so the opposite value excludes every singlet.
int singlet_flip_parity(SiteKind kind, int length);

/// <psi|S_tot^2|psi> in spin units; Pauli sites are converted via sigma = 2S.
double s_tot_squared_expectation(const Wavefunction& psi);

/// Total spin S recovered from S(S+1), rounded to the nearest half-integer.
double total_spin_from_s_squared(double s_squared);

struct SectorLevel {
  int two_sz = 0;
  double energy = 0.0;
};

/// Lowest levels collected across several S^z sectors, used to count full
/// multiplets (a triplet shows up once in each of 2S^z = -2, 0, +2).
struct MultipletReport {
  double ground_energy = 0.0;
  int multiplicity = 0;
  double spread = 0.0;  ///< max - min energy over the counted levels
  std::vector<SectorLevel> levels;
};

/// `levels_per_sector[i]` eigenvalues are computed in sector `two_sz_sectors[i]`;
/// every level within `energy_window` of the global minimum is counted.
MultipletReport aggregate_multiplet(const BondList& bonds, std::span<const int> two_sz_sectors,
                                    std::span<const int> levels_per_sector, std::uint64_t seed,
                                    double energy_window, const LanczosOptions& options = {});

/// Deterministic seed derivation (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace lde
