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
#include <random>
#include <stdexcept>

#include "ldechain/sector_basis.hpp"

namespace lde {

/// Real amplitudes over a SectorBasis. Normalization is the caller's job;
/// solver outputs are unit norm.
struct Wavefunction {
  SectorBasisPtr basis;
  Eigen::VectorXd amplitudes;

  Wavefunction() = default;
  explicit Wavefunction(SectorBasisPtr b)
      : basis(std::move(b)), amplitudes(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis->size()))) {}
  Wavefunction(SectorBasisPtr b, Eigen::VectorXd amps) : basis(std::move(b)), amplitudes(std::move(amps)) {
    if (static_cast<std::size_t>(amplitudes.size()) != basis->size()) {
      throw std::invalid_argument("wavefunction: amplitude count does not match basis size");
    }
  }

  std::size_t size() const noexcept { return static_cast<std::size_t>(amplitudes.size()); }
  double norm() const { return amplitudes.norm(); }
  void normalize() { amplitudes.normalize(); }
};

/// Normalized Gaussian random vector, reproducible for a given seed.
inline Eigen::VectorXd random_unit_vector(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = normal(rng);
  v.normalize();
  return v;
}

}  // namespace lde
