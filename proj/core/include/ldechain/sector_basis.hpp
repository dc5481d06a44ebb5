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

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <vector>

namespace lde {

/// Local Hilbert space of one site. The enumerator value is the local dimension.
enum class SiteKind : std::uint8_t { SpinHalf = 2, SpinOne = 3 };

constexpr int local_dim(SiteKind kind) { return static_cast<int>(kind); }

/// Encoded configuration: bit j (spin-1/2) or base-3 digit j (spin-1) holds site j.
/// Digit 0 is the lowest local S^z, so spin-1/2 uses 1 = up and spin-1 maps
/// digits 0, 1, 2 to m = -1, 0, +1.
using Config = std::uint64_t;

/// Twice the local S^z carried by `digit` (spin-1/2: -1, +1; spin-1: -2, 0, +2).
constexpr int two_sz_of_digit(SiteKind kind, int digit) {
  return kind == SiteKind::SpinHalf ? 2 * digit - 1 : 2 * (digit - 1);
}

/// Number of configurations of `length` sites with the given twice-total-S^z.
/// Returns 0 for unreachable sectors.
std::uint64_t sector_dimension(SiteKind kind, int length, int two_sz_total);

/// d^length, saturating at UINT64_MAX.
std::uint64_t full_space_dimension(SiteKind kind, int length);

/// All configurations of a chain inside one fixed total-S^z sector, sorted
/// ascending, with an exact inverse lookup.
///
/// Lookup uses a direct-address table when d^L 32-bit slots fit in
/// `table_budget_bytes`, and binary search over the sorted states otherwise.
/// Immutable after construction.
class SectorBasis {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
  static constexpr std::size_t kMaxLength = 40;

  struct Options {
    std::size_t table_budget_bytes = std::size_t{512} << 20;
  };

  SectorBasis(SiteKind kind, int length, int two_sz_total);
  SectorBasis(SiteKind kind, int length, int two_sz_total, Options options);

  SiteKind site_kind() const noexcept { return kind_; }
  int local_dimension() const noexcept { return local_dim(kind_); }
  int length() const noexcept { return length_; }
  int two_sz_total() const noexcept { return two_sz_total_; }
  std::size_t size() const noexcept { return states_.size(); }
  bool has_direct_table() const noexcept { return !table_.empty(); }

  std::span<const Config> states() const noexcept { return states_; }
  Config state_at(std::size_t index) const;

  /// Position of `config`; throws std::out_of_range if it is not in the sector.
  std::size_t index_of(Config config) const;

  /// Hot-path lookup: position of `config` or npos.
  std::size_t find(Config config) const noexcept {
    if (!table_.empty()) {
      if (config >= table_.size()) return npos;
      const auto slot = table_[config];
      return slot == kEmptySlot ? npos : static_cast<std::size_t>(slot);
    }
    return find_sorted(config);
  }

  /// d^site, the place value of `site` in the encoding.
  Config place_value(int site) const noexcept { return place_values_[static_cast<std::size_t>(site)]; }

  int digit(Config config, int site) const noexcept {
    if (kind_ == SiteKind::SpinHalf) return static_cast<int>((config >> site) & 1u);
    return static_cast<int>((config / place_values_[static_cast<std::size_t>(site)]) % 3u);
  }

  /// Writes the local digit of every site into `out` (size >= length()).
  void decode(Config config, std::span<int> out) const noexcept;

  /// Inverse of decode.
  Config encode(std::span<const int> digits) const;

  /// Twice the total S^z of an arbitrary encoded configuration.
  int two_sz_of(Config config) const noexcept;

  /// Global spin flip m -> -m on every site. Digits map d -> (d_max - d), so
  /// the flipped encoding is (d^L - 1) - config. Maps sector 2S^z to -2S^z.
  Config flipped(Config config) const noexcept { return top_config_ - config; }

 private:
  static constexpr std::uint32_t kEmptySlot = std::numeric_limits<std::uint32_t>::max();

  std::size_t find_sorted(Config config) const noexcept;
  void enumerate();

  SiteKind kind_;
  int length_;
  int two_sz_total_;
  Config top_config_ = 0;
  std::vector<Config> place_values_;
  std::vector<Config> states_;
  std::vector<std::uint32_t> table_;
};

using SectorBasisPtr = std::shared_ptr<const SectorBasis>;

inline SectorBasisPtr make_sector(SiteKind kind, int length, int two_sz_total,
                                  SectorBasis::Options options = {}) {
  return std::make_shared<const SectorBasis>(kind, length, two_sz_total, options);
}

}  // namespace lde
