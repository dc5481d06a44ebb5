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

#include "ldechain/fit.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <vector>

#include <boost/math/tools/minima.hpp>

namespace lde {
namespace {

struct Linear {
  double asymptote;
  double amplitude;
  double rms;
};

class Problem {
 public:
  Problem(std::span<const FitPoint> points, bool alternating) : alternating_(alternating) {
    for (const auto& p : points) {
      lengths_.push_back(p.length);
      values_.push_back(p.value);
    }
    min_length_ = *std::min_element(lengths_.begin(), lengths_.end());
  }

  double sign(std::size_t i) const { return alternating_ && lengths_[i] % 2 != 0 ? -1.0 : 1.0; }
  std::size_t size() const { return values_.size(); }

  // Best (asymptote, amplitude) at fixed decay length. The exponential column is
  // scaled by exp(L_min / xi) so it stays O(1) for short decay lengths.
  Linear solve(double xi) const {
    const auto n = static_cast<Eigen::Index>(size());
    Eigen::MatrixXd a(n, 2);
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto k = static_cast<std::size_t>(i);
      a(i, 0) = 1.0;
      a(i, 1) = sign(k) * std::exp(-(lengths_[k] - min_length_) / xi);
      y[i] = values_[k];
    }
    const Eigen::Vector2d c = a.colPivHouseholderQr().solve(y);
    const double rms = std::sqrt((a * c - y).squaredNorm() / static_cast<double>(n));
    return {c[0], c[1] * std::exp(min_length_ / xi), rms};
  }

  double rms(double a, double b, double xi) const {
    double s = 0.0;
    for (std::size_t i = 0; i < size(); ++i) {
      const double r = a + b * sign(i) * std::exp(-lengths_[i] / xi) - values_[i];
      s += r * r;
    }
    return std::sqrt(s / static_cast<double>(size()));
  }

  // Gauss-Newton polish on all three parameters; only improving steps are taken.
  void polish(ExtrapolationFit& fit) const {
    const auto n = static_cast<Eigen::Index>(size());
    for (int iter = 0; iter < 50; ++iter) {
      Eigen::MatrixXd jac(n, 3);
      Eigen::VectorXd r(n);
      for (Eigen::Index i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        const double e = sign(k) * std::exp(-lengths_[k] / fit.decay_length);
        r[i] = fit.asymptote + fit.amplitude * e - values_[k];
        jac(i, 0) = 1.0;
        jac(i, 1) = e;
        jac(i, 2) = fit.amplitude * e * lengths_[k] / (fit.decay_length * fit.decay_length);
      }
      const Eigen::Vector3d step = jac.colPivHouseholderQr().solve(-r);
      const double xi = std::clamp(fit.decay_length + step[2], kMinDecayLength, kMaxDecayLength);
      const double candidate = rms(fit.asymptote + step[0], fit.amplitude + step[1], xi);
      if (!(candidate < fit.rms_residual)) break;
      fit.asymptote += step[0];
      fit.amplitude += step[1];
      fit.decay_length = xi;
      fit.rms_residual = candidate;
    }
  }

 private:
  bool alternating_;
  std::vector<int> lengths_;
  std::vector<double> values_;
  double min_length_ = 0.0;
};

}  // namespace

ExtrapolationFit fit_exponential(std::span<const FitPoint> points, bool alternating) {
  if (points.size() < 4) throw std::invalid_argument("fit: need at least 4 points");
  std::set<int> lengths;
  for (const auto& p : points) {
    if (!lengths.insert(p.length).second) throw std::invalid_argument("fit: lengths must be distinct");
    if (!std::isfinite(p.value)) throw std::invalid_argument("fit: non-finite value");
  }

  ExtrapolationFit fit;
  fit.alternating = alternating;
  const auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
                                            [](const FitPoint& a, const FitPoint& b) { return a.value < b.value; });
  if (lo->value == hi->value) {
    fit.asymptote = lo->value;
    fit.amplitude = 0.0;
    fit.decay_length = kMinDecayLength;
    fit.rms_residual = 0.0;
    return fit;
  }

  const Problem problem(points, alternating);
  const double log_lo = std::log(kMinDecayLength);
  const double log_hi = std::log(kMaxDecayLength);
  constexpr int kGrid = 400;
  int best = 0;
  double best_rms = std::numeric_limits<double>::infinity();
  for (int g = 0; g <= kGrid; ++g) {
    const double rms = problem.solve(std::exp(log_lo + (log_hi - log_lo) * g / kGrid)).rms;
    if (rms < best_rms) {
      best_rms = rms;
      best = g;
    }
  }
  const double step = (log_hi - log_lo) / kGrid;
  const double left = log_lo + step * std::max(0, best - 1);
  const double right = log_lo + step * std::min(kGrid, best + 1);
  const auto objective = [&](double log_xi) { return problem.solve(std::exp(log_xi)).rms; };
  const auto [log_xi, rms] =
      boost::math::tools::brent_find_minima(objective, left, right, std::numeric_limits<double>::digits);

  const Linear linear = problem.solve(std::exp(log_xi));
  fit.asymptote = linear.asymptote;
  fit.amplitude = linear.amplitude;
  fit.decay_length = std::exp(log_xi);
  fit.rms_residual = problem.rms(fit.asymptote, fit.amplitude, fit.decay_length);
  (void)rms;
  problem.polish(fit);
  return fit;
}

}  // namespace lde
