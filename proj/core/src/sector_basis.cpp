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

#include "ldechain/sector_basis.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lde {
namespace {

void check_reachable(SiteKind kind, int length, int two_sz_total) {
  if (length < 2 || static_cast<std::size_t>(length) > SectorBasis::kMaxLength) {
    throw std::invalid_argument("sector: length must be in [2, " +
                                std::to_string(SectorBasis::kMaxLength) + "], got " +
                                std::to_string(length));
  }
  const int span = kind == SiteKind::SpinHalf ? length : 2 * length;
  if (two_sz_total < -span || two_sz_total > span) {
    throw std::invalid_argument("sector: |2S^z| = " + std::to_string(two_sz_total) +
                                " exceeds the maximum " + std::to_string(span));
  }
  const bool parity_ok = kind == SiteKind::SpinHalf ? ((two_sz_total - length) % 2 == 0)
                                                    : (two_sz_total % 2 == 0);
  if (!parity_ok) {
    throw std::invalid_argument("sector: 2S^z = " + std::to_string(two_sz_total) +
                                " has the wrong parity for L = " + std::to_string(length));
  }
}

}  // namespace

std::uint64_t full_space_dimension(SiteKind kind, int length) {
  std::uint64_t dim = 1;
  const auto d = static_cast<std::uint64_t>(local_dim(kind));
  for (int i = 0; i < length; ++i) {
    if (dim > std::numeric_limits<std::uint64_t>::max() / d) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    dim *= d;
  }
  return dim;
}

std::uint64_t sector_dimension(SiteKind kind, int length, int two_sz_total) {
  if (length < 1) return 0;
  const int dmax = local_dim(kind) - 1;
  // count[s] = number of digit strings with digit sum s
  std::vector<std::uint64_t> count(1, 1);
  for (int site = 0; site < length; ++site) {
    std::vector<std::uint64_t> next(count.size() + static_cast<std::size_t>(dmax), 0);
    for (std::size_t s = 0; s < count.size(); ++s) {
      for (int dgt = 0; dgt <= dmax; ++dgt) next[s + static_cast<std::size_t>(dgt)] += count[s];
    }
    count = std::move(next);
  }
  // twice-S^z = sum of (2*digit - 1) for spin-1/2, sum of 2*(digit - 1) for spin-1
  const int numerator = kind == SiteKind::SpinHalf ? two_sz_total + length : two_sz_total + 2 * length;
  if (numerator < 0 || numerator % 2 != 0) return 0;
  const auto digit_sum = static_cast<std::size_t>(numerator / 2);
  return digit_sum < count.size() ? count[digit_sum] : 0;
}

SectorBasis::SectorBasis(SiteKind kind, int length, int two_sz_total)
    : SectorBasis(kind, length, two_sz_total, Options{}) {}

SectorBasis::SectorBasis(SiteKind kind, int length, int two_sz_total, Options options)
    : kind_(kind), length_(length), two_sz_total_(two_sz_total) {
  check_reachable(kind, length, two_sz_total);
  place_values_.resize(static_cast<std::size_t>(length));
  Config value = 1;
  for (auto& pv : place_values_) {
    pv = value;
    value *= static_cast<Config>(local_dim(kind));
  }
  top_config_ = value - 1;
  enumerate();

  const std::uint64_t full = full_space_dimension(kind, length);
  if (states_.size() < kEmptySlot && full != std::numeric_limits<std::uint64_t>::max() &&
      full <= options.table_budget_bytes / sizeof(std::uint32_t)) {
    table_.assign(static_cast<std::size_t>(full), kEmptySlot);
    for (std::size_t i = 0; i < states_.size(); ++i) {
      table_[states_[i]] = static_cast<std::uint32_t>(i);
    }
  }
}

void SectorBasis::enumerate() {
  states_.reserve(static_cast<std::size_t>(sector_dimension(kind_, length_, two_sz_total_)));
  if (kind_ == SiteKind::SpinHalf) {
    const int n_up = (two_sz_total_ + length_) / 2;
    if (n_up == 0) {
      states_.push_back(0);
      return;
    }
    const Config limit = Config{1} << length_;
    // Gosper's hack: next integer with the same popcount.
    for (Config v = (Config{1} << n_up) - 1; v < limit;) {
      states_.push_back(v);
      const Config low = v & (~v + 1);
      const Config ripple = v + low;
      v = (((ripple ^ v) >> 2) / low) | ripple;
    }
    return;
  }

  // Spin-1: depth-first from the most significant site with ascending digits,
  // which yields ascending encoded values.
  const int target = two_sz_total_ / 2;  // sum of m over sites
  std::vector<int> digits(static_cast<std::size_t>(length_), 0);
  auto recurse = [&](auto&& self, int site, int remaining, Config prefix) -> void {
    if (site < 0) {
      if (remaining == 0) states_.push_back(prefix);
      return;
    }
    for (int dgt = 0; dgt < 3; ++dgt) {
      const int rest = remaining - (dgt - 1);
      if (rest < -site || rest > site) continue;  // `site` sites left below
      self(self, site - 1, rest, prefix + static_cast<Config>(dgt) * place_values_[static_cast<std::size_t>(site)]);
    }
  };
  recurse(recurse, length_ - 1, target, 0);
}

Config SectorBasis::state_at(std::size_t index) const {
  if (index >= states_.size()) {
    throw std::out_of_range("sector: index " + std::to_string(index) + " out of range [0, " +
                            std::to_string(states_.size()) + ")");
  }
  return states_[index];
}

std::size_t SectorBasis::index_of(Config config) const {
  const auto idx = find(config);
  if (idx == npos) {
    throw std::out_of_range("sector: configuration " + std::to_string(config) +
                            " is not in the 2S^z = " + std::to_string(two_sz_total_) + " sector");
  }
  return idx;
}

std::size_t SectorBasis::find_sorted(Config config) const noexcept {
  const auto it = std::lower_bound(states_.begin(), states_.end(), config);
  if (it == states_.end() || *it != config) return npos;
  return static_cast<std::size_t>(it - states_.begin());
}

void SectorBasis::decode(Config config, std::span<int> out) const noexcept {
  if (kind_ == SiteKind::SpinHalf) {
    for (int s = 0; s < length_; ++s) out[static_cast<std::size_t>(s)] = static_cast<int>((config >> s) & 1u);
    return;
  }
  for (int s = 0; s < length_; ++s) {
    out[static_cast<std::size_t>(s)] = static_cast<int>(config % 3u);
    config /= 3u;
  }
}

Config SectorBasis::encode(std::span<const int> digits) const {
  if (digits.size() != static_cast<std::size_t>(length_)) {
    throw std::invalid_argument("sector: encode expects one digit per site");
  }
  Config c = 0;
  for (int s = 0; s < length_; ++s) {
    const int dgt = digits[static_cast<std::size_t>(s)];
    if (dgt < 0 || dgt >= local_dimension()) throw std::invalid_argument("sector: digit out of range");
    c += static_cast<Config>(dgt) * place_values_[static_cast<std::size_t>(s)];
  }
  return c;
}

int SectorBasis::two_sz_of(Config config) const noexcept {
  int total = 0;
  for (int s = 0; s < length_; ++s) total += two_sz_of_digit(kind_, digit(config, s));
  return total;
}

}  // namespace lde
