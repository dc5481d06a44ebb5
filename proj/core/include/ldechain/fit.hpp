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

#include <span>

namespace lde {

struct FitPoint {
  int length = 0;
  double value = 0.0;
};

/// value(L) = asymptote + amplitude * s(L) * exp(-L / decay_length), with
/// s(L) = (-1)^L when `alternating` and 1 otherwise.
struct ExtrapolationFit {
  double asymptote = 0.0;
  double amplitude = 0.0;
  double decay_length = 0.0;
  double rms_residual = 0.0;
  bool alternating = false;
};

inline constexpr double kMinDecayLength = 0.1;
inline constexpr double kMaxDecayLength = 50.0;

/// Least-squares fit: (asymptote, amplitude) are linear for fixed decay
/// length, which is searched over [0.1, 50]. Needs >= 4 points with
/// distinct L. Constant data gives amplitude 0 and decay length 0.1.
ExtrapolationFit fit_exponential(std::span<const FitPoint> points, bool alternating = false);

}  // namespace lde
