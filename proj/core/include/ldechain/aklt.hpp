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

namespace lde::aklt {

/// Thermodynamic reference values for the open spin-1 chain at beta = 1/3.
struct Reference {
  double correlation_length;  ///< 1 / ln 3
  double zz;                  ///< lim <S^z_1 S^z_L> = -4/9
  double charge;              ///< lim <(S^z_1)^2 (S^z_L)^2> = 4/9
  double partial_concurrence; ///< 1/6
  double negativity;          ///< 2/9
};

const Reference& reference();

struct EndCorrelator {
  double zz;
  double charge;
};

/// Asymptotic end-to-end correlators of the singlet ground state,
/// zz = -4/9 [1 + 6 (-1)^L 3^-L], charge = -zz. Only exponentially accurate
/// at finite L; compare with a band of order exp(-L / xi).
EndCorrelator end_correlator(int length);

/// 10 exp(-L / xi), the comparison band used against exact finite chains.
double finite_size_band(int length);

}  // namespace lde::aklt
