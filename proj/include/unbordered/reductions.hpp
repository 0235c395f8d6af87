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

#ifndef UNBORDERED_REDUCTIONS_HPP
#define UNBORDERED_REDUCTIONS_HPP

// Average-case reductions between L(S) and per(S).
//
// unbordered_via_period: L(S) from per(S[d+1, n-d]) plus O(d) extra work,
// where d = O(log_sigma n) is chosen so that every certified gap exceeds d
// with probability at most 1/n^2 on uniformly random input.
//
// period_via_unbordered: per(S) from L(S) via the sentinel string
// S_$ = S[1, n-L] $ S[L+1, n], using |S| - per(S) = |S_$| - per(S_$).
//
// Both are exact on every input; randomness only affects running time.

#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unbordered/bounds.hpp"
#include "unbordered/error.hpp"
#include "unbordered/stringcore.hpp"
#include "unbordered/symbol_string.hpp"
#include "unbordered/unbordered.hpp"

namespace unbordered {

template <typename F>
concept PeriodBackend = std::invocable<const F&, symbol_view> &&
    std::convertible_to<std::invoke_result_t<const F&, symbol_view>, std::size_t>;

template <typename F>
concept UnborderedBackend = std::invocable<const F&, symbol_view> &&
    std::convertible_to<std::invoke_result_t<const F&, symbol_view>, UnborderedResult>;

/// Linear failure-table period; the default target of the L -> per reduction.
struct FailureTablePeriod {
  std::size_t operator()(symbol_view s) const { return shortest_period(s); }
};

struct ScanUnbordered {
  UnborderedResult operator()(symbol_view s) const { return scan_L(s); }
};

/// ceil(constant_factor * log_sigma(C(0.1 ln sigma) / delta)).
inline std::size_t threshold_d_for_delta(std::uint64_t sigma, double delta,
                                         double constant_factor = 10.0) {
  bounds::require_sigma(sigma);
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw error(errc::out_of_domain, "delta must lie in (0, 1]");
  }
  const double c = bounds::c_bound(sigma, bounds::max_t(sigma));
  const double d = constant_factor * (std::log(c) - std::log(delta)) /
                   std::log(static_cast<double>(sigma));
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(d)));
}

/// Threshold d for failure probability delta = 1/n^2.
inline std::size_t threshold_d(std::uint64_t sigma, std::uint64_t n,
                               double constant_factor = 10.0) {
  bounds::require_sigma(sigma);
  if (n < 1) throw error(errc::out_of_domain, "n must be at least 1");
  const double c = bounds::c_bound(sigma, bounds::max_t(sigma));
  const double nn = static_cast<double>(n);
  const double d = constant_factor * (2.0 * std::log(nn) + std::log(c)) /
                   std::log(static_cast<double>(sigma));
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(d)));
}

struct ReductionConfig {
  double delta = 0.0;
  std::size_t d = 1;
  double constant_factor = 10.0;

  /// Configuration with delta = 1/n^2 and d from threshold_d.
  static ReductionConfig for_length(std::uint64_t sigma, std::uint64_t n,
                                    double constant_factor = 10.0) {
    const double nn = static_cast<double>(std::max<std::uint64_t>(n, 1));
    return {1.0 / (nn * nn), threshold_d(sigma, n, constant_factor), constant_factor};
  }

  /// Fixed d, bypassing the formula (tests and experiments).
  static ReductionConfig with_d(std::size_t d) {
    if (d < 1) throw error(errc::out_of_domain, "d must be at least 1");
    return {0.0, d, 0.0};
  }
};

/// The strings built by unbordered_via_period when n > 6d.
///
/// S' = S[d+1, n-d] is passed to the period backend as a view into S and is
/// recorded only by its span.
struct ReductionWitness {
  std::vector<symbol> s_bar;        // S[1, 3d] S[n-3d+1, n]
  FactorSpan s_prime;               // S[d+1, n-d]
  std::vector<symbol> s_bar_prime;  // S[d+1, 3d] S[n-3d+1, n-d]
  // |S̄| - L(S̄), |S'| - per(S'), |S̄'| - per(S̄').
  std::array<std::size_t, 3> gaps{};
};

struct ReductionOutcome {
  std::size_t value = 0;
  bool fallback_used = false;
  std::optional<ReductionWitness> witness;
  std::optional<FactorSpan> factor;  // maximal unbordered factor, when known
  std::optional<std::vector<symbol>> sentinel_string;
  std::string backend;
  std::size_t d = 0;
  std::size_t symbols_touched = 0;  // excludes the period backend's own work
};

/// L(S) from per(S') using the O(d) certified-gap construction; falls back
/// to `fallback` when n <= 6d or any gap exceeds d.
template <PeriodBackend Period = FailureTablePeriod,
          UnborderedBackend Fallback = ScanUnbordered>
ReductionOutcome unbordered_via_period(symbol_view s, const ReductionConfig& cfg,
                                       const Period& period = {},
                                       const Fallback& fallback = {}) {
  detail::require_nonempty(s, "unbordered_via_period");
  if (cfg.d < 1) throw error(errc::out_of_domain, "d must be at least 1");
  const std::size_t n = s.size();
  const std::size_t d = cfg.d;

  ReductionOutcome out;
  out.d = d;

  auto run_fallback = [&](bool is_fallback) {
    const UnborderedResult r = fallback(s);
    out.value = r.length;
    out.factor = r.witness;
    out.fallback_used = is_fallback;
    out.backend = "fallback";
  };

  if (n <= 6 * d) {
    run_fallback(false);
    return out;
  }

  ReductionWitness w;
  w.s_bar.reserve(6 * d);
  w.s_bar.insert(w.s_bar.end(), s.begin(), s.begin() + 3 * d);
  w.s_bar.insert(w.s_bar.end(), s.end() - 3 * d, s.end());
  w.s_prime = {d + 1, n - d};
  w.s_bar_prime.reserve(4 * d);
  w.s_bar_prime.insert(w.s_bar_prime.end(), s.begin() + d, s.begin() + 3 * d);
  w.s_bar_prime.insert(w.s_bar_prime.end(), s.end() - 3 * d, s.end() - d);
  out.symbols_touched += w.s_bar.size() + w.s_bar_prime.size();

  ScanStats scan_stats;
  const UnborderedResult bar = scan_L(w.s_bar, &scan_stats);
  out.symbols_touched += scan_stats.symbols_touched;

  const symbol_view s_prime = factor_of(s, w.s_prime);
  const std::size_t per_prime = period(s_prime);

  const std::size_t per_bar_prime = shortest_period(w.s_bar_prime);
  out.symbols_touched += w.s_bar_prime.size();

  w.gaps = {w.s_bar.size() - bar.length, s_prime.size() - per_prime,
            w.s_bar_prime.size() - per_bar_prime};
  const bool certified = w.gaps[0] <= d && w.gaps[1] <= d && w.gaps[2] <= d;
  out.witness = std::move(w);
  if (!certified) {
    const std::size_t touched = out.symbols_touched;
    run_fallback(true);
    out.symbols_touched = touched;
    return out;
  }

  // Positions past 3d in S̄ come from the suffix S[n-3d+1, n].
  const std::size_t shift = n - 6 * d;
  out.value = n - out.witness->gaps[0];
  out.factor = FactorSpan{bar.witness.start, bar.witness.end + shift};
  out.backend = "period";
  return out;
}

/// per(S) from L(S) through the sentinel string
/// S_$ = S[1, n-L] $ S[L+1, n]; only the O(n - L + 1) symbols of S_$ are
/// touched beyond the backend call.
template <UnborderedBackend Unbordered = ScanUnbordered>
ReductionOutcome period_via_unbordered(symbol_view s, symbol sentinel,
                                       const Unbordered& unbordered = {}) {
  detail::require_nonempty(s, "period_via_unbordered");
  const std::size_t n = s.size();
  const UnborderedResult r = unbordered(s);
  const std::size_t ell = r.length;

  std::vector<symbol> s_dollar;
  s_dollar.reserve(2 * (n - ell) + 1);
  s_dollar.insert(s_dollar.end(), s.begin(), s.begin() + (n - ell));
  s_dollar.push_back(sentinel);
  s_dollar.insert(s_dollar.end(), s.begin() + ell, s.end());

  ReductionOutcome out;
  const std::size_t per_dollar = shortest_period(s_dollar);
  out.value = n - (s_dollar.size() - per_dollar);
  out.factor = r.witness;
  out.backend = "unbordered";
  out.symbols_touched = s_dollar.size();
  out.sentinel_string = std::move(s_dollar);
  return out;
}

inline ReductionOutcome period_via_unbordered(const SymbolString& s) {
  return period_via_unbordered(s.view(), s.alphabet().sentinel());
}

}  // namespace unbordered

#endif  // UNBORDERED_REDUCTIONS_HPP
