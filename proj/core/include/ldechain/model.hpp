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
#include <cstdint>
#include <span>
#include <vector>

#include "ldechain/operators.hpp"
#include "ldechain/sector_basis.hpp"
#include "ldechain/wavefunction.hpp"

namespace lde {

struct Bond {
  int site_i = 0;
  int site_j = 0;
  double coefficient = 0.0;
  OperatorKind kind = OperatorKind::ExchangeHalf;
};

/// Declarative Hamiltonian: a list of two-site terms plus the site algebra
/// and chain length they act on. Validated on construction: sites in range
/// and distinct, operator kinds matching the site kind.
class BondList {
 public:
  BondList(SiteKind kind, int length, std::vector<Bond> bonds);

  SiteKind site_kind() const noexcept { return kind_; }
  int length() const noexcept { return length_; }
  std::span<const Bond> bonds() const noexcept { return bonds_; }
  std::size_t size() const noexcept { return bonds_.size(); }

 private:
  SiteKind kind_;
  int length_;
  std::vector<Bond> bonds_;
};

/// Open dimerized chain with next-nearest-neighbor frustration (Pauli spins):
///   H = sum_{j=1}^{L-1} [1 + delta (-1)^j] s_j.s_{j+1} + alpha sum_{j=1}^{L-2} s_j.s_{j+2}
struct DimerFrustrationParams {
  int length = 0;
  double delta = 0.0;
  double alpha = 0.0;
};

/// Open spin-1 chain H = sum_i [S_i.S_{i+1} + beta (S_i.S_{i+1})^2].
struct BlbqParams {
  int length = 0;
  double beta = 0.0;
};

/// Periodic Heisenberg ring of `chain_length` Pauli spins plus two probe spins.
/// Probe A (site L) couples to ring site 0, probe B (site L+1) to ring site
/// `offset`, both with strength `probe_coupling`.
struct ProbeParams {
  int chain_length = 0;
  int offset = 1;
  double probe_coupling = 0.0;
};

BondList build_dimer_frustrated(const DimerFrustrationParams& p);
BondList build_blbq(const BlbqParams& p);
BondList build_probed_heisenberg(const ProbeParams& p);

/// Sum over all pairs of S_i.S_j (spin units, Pauli terms rescaled by 1/4)
/// with coefficient 2; adding `total_spin_constant` gives S_tot^2.
BondList build_total_spin_pairs(SiteKind kind, int length);
double total_spin_constant(SiteKind kind, int length);

/// BondList compiled against one sector: site pairs are merged into a single
/// dense two-site matrix and reduced to nonzero sparse rows whose entries
/// carry the configuration offset they induce.
///
/// apply() is a gather: every output amplitude is written once, so the loop
/// over basis states parallelizes without synchronization.
class HamiltonianOperator {
 public:
  HamiltonianOperator(const BondList& bonds, SectorBasisPtr basis, double diagonal_shift = 0.0);

  std::size_t dimension() const noexcept { return basis_->size(); }
  const SectorBasisPtr& basis() const noexcept { return basis_; }

  void apply(std::span<const double> in, std::span<double> out) const;
  Eigen::VectorXd apply(const Eigen::VectorXd& in) const;

  /// <phi|H|psi>
  double matrix_element(const Eigen::VectorXd& phi, const Eigen::VectorXd& psi) const;

 private:
  struct Entry {
    std::int64_t offset;
    double value;
  };
  struct Pair {
    int site_i;
    int site_j;
    // row r = digit_i * d + digit_j: diagonal element, and `width`
    // off-diagonal slots starting at entries_[first_entry + r * width]
    std::array<double, 9> diagonal;
    std::uint32_t first_entry;
    std::uint32_t width;
  };

  SectorBasisPtr basis_;
  double shift_;
  std::vector<Pair> pairs_;
  std::vector<Entry> entries_;
};

/// H psi for a one-off product; builds a HamiltonianOperator internally.
Wavefunction apply(const BondList& bonds, const Wavefunction& psi);

}  // namespace lde
