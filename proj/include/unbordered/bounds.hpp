// Copyright 2026 The unbordered Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UNBORDERED_BOUNDS_HPP
#define UNBORDERED_BOUNDS_HPP

// Closed-form bounds on the distribution of n - L(S) for a uniformly random
// string S over an alphabet of size sigma.
//
// The moment-generating function of n - L(S) is bounded, for every n and
// every 0 <= t <= 0.1 ln(sigma), by
//
//   C(t) = (sigma^3 - sigma^2 e^{2t}) / (sigma^3 - 2 sigma^2 e^{2t} + e^{4t}).
//
// The expectation bound (C(t) - 1) / t and the Markov tail bound
// C(t) e^{-t ell} follow; both are minimised over t numerically.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>

#include "unbordered/error.hpp"

namespace unbordered::bounds {

inline constexpr double kMinT = 1e-6;
inline constexpr int kGridPoints = 1024;

inline void require_sigma(std::uint64_t sigma) {
  if (sigma < 2) {
    throw error(errc::alphabet_too_small,
                "sigma = " + std::to_string(sigma) + ", need sigma >= 2");
  }
}

/// Upper end of the admissible t range, 0.1 ln(sigma).
inline double max_t(std::uint64_t sigma) {
  require_sigma(sigma);
  return 0.1 * std::log(static_cast<double>(sigma));
}

inline void require_t(std::uint64_t sigma, double t) {
  const double hi = max_t(sigma);
  if (!(t >= 0.0) || t > hi * (1.0 + 1e-12)) {
    throw error(errc::out_of_domain, "t = " + std::to_string(t) + " outside [0, " +
                                         std::to_string(hi) + "]");
  }
}

/// sigma^3 - 2 sigma^2 e^{2t} + e^{4t}; positive on the admissible range.
inline double c_denominator(std::uint64_t sigma, double t) {
  const double s = static_cast<double>(sigma);
  const double x = std::exp(2.0 * t);
  return s * s * (s - 2.0 * x) + x * x;
}

/// C(t) - 1 = e^{2t} (sigma^2 - e^{2t}) / denominator, without the
/// cancellation of subtracting 1 from C(t) near t = 0.
inline double c_bound_minus_one(std::uint64_t sigma, double t) {
  require_t(sigma, t);
  const double s = static_cast<double>(sigma);
  const double x = std::exp(2.0 * t);
  return x * (s * s - x) / c_denominator(sigma, t);
}

inline double c_bound(std::uint64_t sigma, double t) {
  require_t(sigma, t);
  const double s = static_cast<double>(sigma);
  const double x = std::exp(2.0 * t);
  return s * s * (s - x) / c_denominator(sigma, t);
}

/// Result of a one-dimensional minimisation over t.
struct Minimum {
  double t = 0.0;
  double value = 0.0;
};

/// Uniform grid over [lo, hi] followed by golden-section search on the
/// bracket around the best grid point. Does not assume unimodality globally.
inline Minimum minimize(const std::function<double(double)>& f, double lo, double hi,
                        int grid = kGridPoints) {
  Minimum best{lo, f(lo)};
  int best_k = 0;
  const double step = (hi - lo) / grid;
  for (int k = 1; k <= grid; ++k) {
    const double t = (k == grid) ? hi : lo + step * k;
    const double v = f(t);
    if (v < best.value) {
      best = {t, v};
      best_k = k;
    }
  }
  double a = lo + step * std::max(0, best_k - 1);
  double b = (best_k + 1 >= grid) ? hi : lo + step * (best_k + 1);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int iter = 0; iter < 200 && (b - a) > 1e-15 * std::max(1.0, std::abs(b)); ++iter) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  if (fc < best.value) best = {c, fc};
  if (fd < best.value) best = {d, fd};
  return best;
}

/// min over t in (0, 0.1 ln sigma] of (C(t) - 1) / t, with its minimiser.
inline Minimum optimize_expectation(std::uint64_t sigma) {
  const double hi = max_t(sigma);
  return minimize([sigma](double t) { return c_bound_minus_one(sigma, t) / t; },
                  kMinT, hi);
}

/// Upper bound on E[n - L(S)], independent of n.
inline double expectation_bound(std::uint64_t sigma) {
  return optimize_expectation(sigma).value;
}

/// Minimiser of C(t) e^{-t ell}, searched in log space.
inline Minimum optimize_tail(std::uint64_t sigma, std::uint64_t ell) {
  const double hi = max_t(sigma);
  const double l = static_cast<double>(ell);
  Minimum m = minimize(
      [sigma, l](double t) { return std::log(c_bound(sigma, t)) - t * l; }, 0.0, hi);
  m.value = std::exp(m.value);
  return m;
}

/// Markov bound on P(n - L(S) >= ell), clamped to 1.
inline double tail_bound(std::uint64_t sigma, std::uint64_t ell) {
  return std::min(1.0, optimize_tail(sigma, ell).value);
}

/// E[n - L(S)] >= P(S[1] = S[n]) = 1/sigma for n >= 2, and n - L(S) = 0
/// for n <= 1.
inline double delta_lower_bound(std::uint64_t sigma, std::uint64_t n) {
  require_sigma(sigma);
  if (n < 2) return 0.0;
  return 1.0 / static_cast<double>(sigma);
}

/// Snapshot of the bound functions at one t.
struct BoundEvaluation {
  std::uint64_t sigma = 2;
  double t = 0.0;
  double c_of_t = 1.0;
  double expectation_bound = 0.0;  // NaN at t = 0

  double tail(std::uint64_t ell) const {
    return std::min(1.0, c_of_t * std::exp(-t * static_cast<double>(ell)));
  }
};

inline BoundEvaluation evaluate(std::uint64_t sigma, double t) {
  BoundEvaluation e;
  e.sigma = sigma;
  e.t = t;
  e.c_of_t = c_bound(sigma, t);
  e.expectation_bound = t > 0.0 ? c_bound_minus_one(sigma, t) / t : std::nan("");
  return e;
}

}  // namespace unbordered::bounds

#endif  // UNBORDERED_BOUNDS_HPP
