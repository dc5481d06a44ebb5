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

#include "ldechain/model.hpp"

#include <array>
#include <cassert>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace lde {
namespace {

// Every two-site matrix must only connect local pairs with equal total S^z.
bool conserves_sz(OperatorKind kind) {
  const auto& m = two_site_matrix(kind);
  const SiteKind sk = site_kind_of(kind);
  const int d = local_dim(sk);
  for (int r = 0; r < d * d; ++r) {
    for (int c = 0; c < d * d; ++c) {
      if (m(r, c) == 0.0) continue;
      const int sz_r = two_sz_of_digit(sk, r / d) + two_sz_of_digit(sk, r % d);
      const int sz_c = two_sz_of_digit(sk, c / d) + two_sz_of_digit(sk, c % d);
      if (sz_r != sz_c) return false;
    }
  }
  return true;
}

void verify_sz_conservation_once() {
  static const bool ok = conserves_sz(OperatorKind::ExchangeHalf) &&
                         conserves_sz(OperatorKind::ExchangeOne) &&
                         conserves_sz(OperatorKind::BiquadOne);
  if (!ok) throw std::logic_error("two-site operator does not conserve total S^z");
}

}  // namespace

BondList::BondList(SiteKind kind, int length, std::vector<Bond> bonds)
    : kind_(kind), length_(length), bonds_(std::move(bonds)) {
  verify_sz_conservation_once();
  if (length_ < 2) throw std::invalid_argument("bonds: length must be >= 2");
  for (const auto& b : bonds_) {
    if (b.site_i < 0 || b.site_i >= length_ || b.site_j < 0 || b.site_j >= length_) {
      throw std::out_of_range("bonds: site index out of range in bond (" + std::to_string(b.site_i) +
                              ", " + std::to_string(b.site_j) + ")");
    }
    if (b.site_i == b.site_j) {
      throw std::invalid_argument("bonds: bond sites must be distinct (" + std::to_string(b.site_i) + ")");
    }
    if (site_kind_of(b.kind) != kind_) {
      throw std::invalid_argument("bonds: operator " + std::string(to_string(b.kind)) +
                                  " does not act on this site kind");
    }
    if (!std::isfinite(b.coefficient)) throw std::invalid_argument("bonds: non-finite coefficient");
  }
}

BondList build_dimer_frustrated(const DimerFrustrationParams& p) {
  if (p.length < 2 || p.length % 2 != 0) {
    throw std::invalid_argument("dimer model: L must be even and >= 2, got " + std::to_string(p.length));
  }
  if (!(std::abs(p.delta) < 1.0)) {
    throw std::invalid_argument("dimer model: |delta| must be < 1, got " + std::to_string(p.delta));
  }
  if (!std::isfinite(p.alpha)) throw std::invalid_argument("dimer model: alpha must be finite");
  std::vector<Bond> bonds;
  // bond j (1-based) joins sites j and j+1, i.e. 0-based (j-1, j)
  for (int j = 1; j <= p.length - 1; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    bonds.push_back({j - 1, j, 1.0 + p.delta * sign, OperatorKind::ExchangeHalf});
  }
  if (p.alpha != 0.0) {
    for (int j = 1; j <= p.length - 2; ++j) {
      bonds.push_back({j - 1, j + 1, p.alpha, OperatorKind::ExchangeHalf});
    }
  }
  return BondList(SiteKind::SpinHalf, p.length, std::move(bonds));
}

BondList build_blbq(const BlbqParams& p) {
  if (p.length < 2) throw std::invalid_argument("spin-1 chain: L must be >= 2");
  if (!std::isfinite(p.beta)) throw std::invalid_argument("spin-1 chain: beta must be finite");
  std::vector<Bond> bonds;
  for (int i = 0; i + 1 < p.length; ++i) {
    bonds.push_back({i, i + 1, 1.0, OperatorKind::ExchangeOne});
    bonds.push_back({i, i + 1, p.beta, OperatorKind::BiquadOne});
  }
  return BondList(SiteKind::SpinOne, p.length, std::move(bonds));
}

BondList build_probed_heisenberg(const ProbeParams& p) {
  if (p.chain_length < 3) throw std::invalid_argument("probe model: ring length must be >= 3");
  if (p.offset < 1 || p.offset > p.chain_length / 2) {
    throw std::invalid_argument("probe model: offset d must lie in [1, L/2], got " + std::to_string(p.offset));
  }
  if (!std::isfinite(p.probe_coupling)) throw std::invalid_argument("probe model: J_p must be finite");
  const int L = p.chain_length;
  std::vector<Bond> bonds;
  for (int i = 0; i < L; ++i) bonds.push_back({i, (i + 1) % L, 1.0, OperatorKind::ExchangeHalf});
  bonds.push_back({0, L, p.probe_coupling, OperatorKind::ExchangeHalf});
  bonds.push_back({p.offset, L + 1, p.probe_coupling, OperatorKind::ExchangeHalf});
  return BondList(SiteKind::SpinHalf, L + 2, std::move(bonds));
}

BondList build_total_spin_pairs(SiteKind kind, int length) {
  // S_i.S_j = sigma_i.sigma_j / 4 for Pauli terms
  const bool half = kind == SiteKind::SpinHalf;
  const OperatorKind op = half ? OperatorKind::ExchangeHalf : OperatorKind::ExchangeOne;
  const double coefficient = half ? 0.5 : 2.0;
  std::vector<Bond> bonds;
  for (int i = 0; i < length; ++i) {
    for (int j = i + 1; j < length; ++j) bonds.push_back({i, j, coefficient, op});
  }
  return BondList(kind, length, std::move(bonds));
}

double total_spin_constant(SiteKind kind, int length) {
  const double s = 0.5 * (local_dim(kind) - 1);
  return length * s * (s + 1.0);
}

HamiltonianOperator::HamiltonianOperator(const BondList& bonds, SectorBasisPtr basis, double diagonal_shift)
    : basis_(std::move(basis)), shift_(diagonal_shift) {
  if (!basis_) throw std::invalid_argument("operator: null basis");
  if (basis_->site_kind() != bonds.site_kind() || basis_->length() != bonds.length()) {
    throw std::invalid_argument("operator: basis (L=" + std::to_string(basis_->length()) +
                                ") does not match the bond list (L=" + std::to_string(bonds.length()) + ")");
  }
  const int d = basis_->local_dimension();
  const int d2 = d * d;

  std::map<std::pair<int, int>, Eigen::MatrixXd> merged;
  for (const auto& b : bonds.bonds()) {
    const int lo = std::min(b.site_i, b.site_j);
    const int hi = std::max(b.site_i, b.site_j);
    auto [it, inserted] = merged.try_emplace({lo, hi}, Eigen::MatrixXd::Zero(d2, d2));
    const auto& m = two_site_matrix(b.kind);
    if (b.site_i == lo) {
      it->second += b.coefficient * m;
    } else {
      // relabel (a, b) -> (b, a) on both sides
      for (int r = 0; r < d2; ++r) {
        for (int c = 0; c < d2; ++c) {
          it->second((r % d) * d + r / d, (c % d) * d + c / d) += b.coefficient * m(r, c);
        }
      }
    }
  }

  // Every row of a pair is padded to the same number of off-diagonal slots
  // (dummy slots point back at the state with weight 0). The fixed trip count
  // keeps the inner loop free of data-dependent branches.
  for (const auto& [key, m] : merged) {
    Pair pair{};
    pair.site_i = key.first;
    pair.site_j = key.second;
    const auto w_lo = static_cast<std::int64_t>(basis_->place_value(key.first));
    const auto w_hi = static_cast<std::int64_t>(basis_->place_value(key.second));
    std::vector<std::vector<Entry>> rows(static_cast<std::size_t>(d2));
    std::size_t width = 0;
    for (int r = 0; r < d2; ++r) {
      pair.diagonal[static_cast<std::size_t>(r)] = m(r, r);
      for (int c = 0; c < d2; ++c) {
        if (c == r || m(r, c) == 0.0) continue;
        const std::int64_t offset = (c / d - r / d) * w_lo + (c % d - r % d) * w_hi;
        rows[static_cast<std::size_t>(r)].push_back({offset, m(r, c)});
      }
      width = std::max(width, rows[static_cast<std::size_t>(r)].size());
    }
    pair.first_entry = static_cast<std::uint32_t>(entries_.size());
    pair.width = static_cast<std::uint32_t>(width);
    for (auto& row : rows) {
      row.resize(width, Entry{0, 0.0});
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
    pairs_.push_back(pair);
  }
}

void HamiltonianOperator::apply(std::span<const double> in, std::span<double> out) const {
  const std::size_t dim = basis_->size();
  if (in.size() != dim || out.size() != dim) {
    throw std::invalid_argument("operator: vector size " + std::to_string(in.size()) +
                                " does not match sector dimension " + std::to_string(dim));
  }
  const auto states = basis_->states();
  const SectorBasis& basis = *basis_;
  const int d = basis.local_dimension();
  const int length = basis.length();
  const bool half = basis.site_kind() == SiteKind::SpinHalf;
  const auto n = static_cast<std::int64_t>(dim);

#pragma omp parallel for schedule(static)
  for (std::int64_t idx = 0; idx < n; ++idx) {
    const Config c = states[static_cast<std::size_t>(idx)];
    std::array<int, SectorBasis::kMaxLength> digits{};
    if (half) {
      for (int s = 0; s < length; ++s) digits[static_cast<std::size_t>(s)] = static_cast<int>((c >> s) & 1u);
    } else {
      Config rest = c;
      for (int s = 0; s < length; ++s) {
        digits[static_cast<std::size_t>(s)] = static_cast<int>(rest % 3u);
        rest /= 3u;
      }
    }
    double diagonal = shift_;
    double acc = 0.0;
    for (const auto& pair : pairs_) {
      const auto row = static_cast<std::size_t>(digits[static_cast<std::size_t>(pair.site_i)] * d +
                                                digits[static_cast<std::size_t>(pair.site_j)]);
      diagonal += pair.diagonal[row];
      const Entry* slot = entries_.data() + pair.first_entry + row * pair.width;
      for (std::uint32_t t = 0; t < pair.width; ++t) {
        const Entry& entry = slot[t];
        const std::size_t j = basis.find(static_cast<Config>(static_cast<std::int64_t>(c) + entry.offset));
        assert(j != SectorBasis::npos && "S^z-conserving term left the sector");
        acc += entry.value * in[j];
      }
    }
    acc += diagonal * in[static_cast<std::size_t>(idx)];
    out[static_cast<std::size_t>(idx)] = acc;
  }
}

Eigen::VectorXd HamiltonianOperator::apply(const Eigen::VectorXd& in) const {
  Eigen::VectorXd out(in.size());
  apply(std::span<const double>(in.data(), static_cast<std::size_t>(in.size())),
        std::span<double>(out.data(), static_cast<std::size_t>(out.size())));
  return out;
}

double HamiltonianOperator::matrix_element(const Eigen::VectorXd& phi, const Eigen::VectorXd& psi) const {
  return phi.dot(apply(psi));
}

Wavefunction apply(const BondList& bonds, const Wavefunction& psi) {
  if (!psi.basis) throw std::invalid_argument("apply: wavefunction has no basis");
  HamiltonianOperator op(bonds, psi.basis);
  return Wavefunction(psi.basis, op.apply(psi.amplitudes));
}

}  // namespace lde
