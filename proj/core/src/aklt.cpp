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

#include "ldechain/aklt.hpp"

#include <cmath>
#include <stdexcept>

namespace lde::aklt {

const Reference& reference() {
  static const Reference ref{1.0 / std::log(3.0), -4.0 / 9.0, 4.0 / 9.0, 1.0 / 6.0, 2.0 / 9.0};
  return ref;
}

EndCorrelator end_correlator(int length) {
  if (length < 2) throw std::invalid_argument("aklt: L must be >= 2");
  const double sign = length % 2 == 0 ? 1.0 : -1.0;
  const double zz = -4.0 / 9.0 * (1.0 + 6.0 * sign * std::pow(3.0, -length));
  return {zz, -zz};
}

double finite_size_band(int length) { return 10.0 * std::exp(-length / reference().correlation_length); }

}  // namespace lde::aklt
