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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. All tolerances are fixed below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "oracles.hpp"
#include "unbordered/unbordered_all.hpp"

namespace {

using namespace unbordered;
using Clock = std::chrono::steady_clock;

constexpr double kSE = 3.0;
constexpr std::uint64_t kSeed = 20260415;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. per = 7, L = 6, maximal factors {(1,6), (5,10)} for 1011001101; < 1 ms.
Verdict worked_example() {
  Verdict v;
  const SymbolString s = oracle::binary("1011001101");
  const auto t0 = Clock::now();
  const std::size_t per = shortest_period(s);
  const UnborderedResult scan = scan_L(s);
  const UnborderedResult brute = brute_force_L(s);
  const std::vector<FactorSpan> spans = maximal_factors(s);
  const double ms = seconds_since(t0) * 1e3;
  v.require(per == 7, fmt("per = %zu", per));
  v.require(scan.length == 6 && brute.length == 6, fmt("L = %zu/%zu", scan.length, brute.length));
  v.require(spans == std::vector<FactorSpan>{{1, 6}, {5, 10}}, "maximal factors differ");
  v.require(ms < 1.0, fmt("took %.3f ms", ms));
  v.detail += fmt("%sper=7 L=6 factors=[1,6],[5,10] in %.4f ms", v.detail.empty() ? "" : " | ", ms);
  return v;
}

// 2. Exhaustive binary strings n <= 14, zero mismatches, < 60 s.
Verdict exhaustive_oracle() {
  Verdict v;
  const auto t0 = Clock::now();
  std::size_t strings = 0, mismatches = 0;
  const ReductionConfig d2 = ReductionConfig::with_d(2);
  for (std::size_t n = 1; n <= 14; ++n) {
    oracle::for_each_string(2, n, [&](symbol_view s) {
      ++strings;
      const std::size_t brute = brute_force_L(s).length;
      bool ok = scan_L(s).length == brute;
      ok = ok && unbordered_via_period(s, d2).value == brute;
      ok = ok && period_via_unbordered(s, 2).value == shortest_period(s);
      const std::size_t f = shortest_border(s);
      ok = ok && f >= 1 && (2 * f <= n || f == n);
      mismatches += ok ? 0 : 1;
    });
  }
  const double secs = seconds_since(t0);
  v.require(mismatches == 0, fmt("%zu mismatches", mismatches));
  v.require(secs < 60.0, fmt("took %.1f s", secs));
  v.detail += fmt("%s%zu strings, %zu mismatches, %.2f s", v.detail.empty() ? "" : " | ", strings,
                  mismatches, secs);
  return v;
}

// 3. |S| - per(S) = |S_$| - per(S_$) on 1e5 random strings.
Verdict sentinel_identity() {
  Verdict v;
  std::mt19937_64 gen(kSeed);
  const std::uint32_t sigmas[] = {2, 3, 4, 26};
  std::size_t violations = 0;
  const std::size_t total = 100000;
  for (std::size_t k = 0; k < total; ++k) {
    const std::uint32_t sigma = sigmas[k % 4];
    const std::size_t n = 1 + gen() % 512;
    const SymbolString s = sample_string(sigma, n, gen());
    const ReductionOutcome o = period_via_unbordered(s);
    const std::vector<symbol>& sd = *o.sentinel_string;
    const std::size_t per = shortest_period(s);
    if (n - per != sd.size() - shortest_period(sd) || o.value != per) ++violations;
  }
  v.require(violations == 0, fmt("%zu violations", violations));
  v.detail += fmt("%s%zu strings, %zu violations", v.detail.empty() ? "" : " | ", total, violations);
  return v;
}

ExperimentConfig monte_carlo(std::uint32_t sigma, std::size_t n, std::size_t trials,
                             std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.sigma = sigma;
  cfg.n = n;
  cfg.trials = trials;
  cfg.rng = RngSpec{seed};
  cfg.ell_grid = {};
  cfg.t_fractions = {};
  return cfg;
}

// 4. MGF at t in {0.25, 0.5, 1} * 0.1 ln 2 stays under C(t) + 3 SE.
Verdict lemma_mgf() {
  Verdict v;
  const auto t0 = Clock::now();
  ExperimentConfig cfg = monte_carlo(2, 1000, 10000, kSeed + 4);
  cfg.t_fractions = {0.25, 0.5, 1.0};
  const ExperimentReport r = run_experiment(cfg);
  const double secs = seconds_since(t0);
  const double c_end = bounds::c_bound(2, bounds::max_t(2));
  v.require(std::abs(c_end - 26.21) < 0.005, fmt("C(0.1 ln 2) = %.6f", c_end));
  std::string rows;
  for (const MgfRow& m : r.mgf) {
    v.require(m.empirical <= m.bound + kSE * m.se, fmt("t=%.5f: %.4f > %.4f", m.t, m.empirical, m.bound));
    rows += fmt(" M(%.4f)=%.4f<=%.4f", m.t, m.empirical, m.bound);
  }
  v.require(secs <= 60.0, fmt("took %.1f s", secs));
  v.require(r.audit_mismatches == 0, "audit mismatch");
  v.detail += fmt("%s%s, %.1f s", v.detail.empty() ? "" : " |", rows.c_str(), secs);
  return v;
}

// 5. sigma = 16 mean in [1/16 - 3SE, 0.4978 + 3SE]; sigma = 2 means agree
//    across n in {100, 1000, 10000} within 3 combined SE.
Verdict expectation_sandwich() {
  Verdict v;
  const ExperimentReport r16 = run_experiment(monte_carlo(16, 1000, 10000, kSeed + 5));
  const double lower = bounds::delta_lower_bound(16, 1000);
  const double upper = bounds::evaluate(16, bounds::max_t(16)).expectation_bound;  // 0.49778
  v.require(std::abs(upper - 0.4978) < 1e-4, fmt("endpoint bound %.6f", upper));
  v.require(r16.mean_delta >= lower - kSE * r16.se_delta, fmt("mean %.4f below lower", r16.mean_delta));
  v.require(r16.mean_delta <= upper + kSE * r16.se_delta, fmt("mean %.4f above upper", r16.mean_delta));
  std::string detail = fmt("sigma=16 mean=%.4f+-%.4f in [%.4f, %.4f]", r16.mean_delta,
                           r16.se_delta, lower, upper);

  std::vector<ExperimentReport> by_n;
  for (std::size_t n : {100u, 1000u, 10000u}) by_n.push_back(run_experiment(monte_carlo(2, n, 10000, kSeed + 50 + n)));
  detail += "; sigma=2 means";
  for (const auto& r : by_n) detail += fmt(" n=%zu:%.4f+-%.4f", r.n, r.mean_delta, r.se_delta);
  for (std::size_t a = 0; a < by_n.size(); ++a) {
    for (std::size_t b = a + 1; b < by_n.size(); ++b) {
      const double diff = std::abs(by_n[a].mean_delta - by_n[b].mean_delta);
      const double se = std::hypot(by_n[a].se_delta, by_n[b].se_delta);
      v.require(diff <= kSE * se, fmt("n=%zu vs n=%zu differ by %.4f > %.4f", by_n[a].n, by_n[b].n, diff, kSE * se));
    }
  }
  v.detail += (v.detail.empty() ? "" : " | ") + detail;
  return v;
}

// 6. Tail P(Delta >= ell) <= tail_bound + 3 SE for ell = 1..40, and the
//    empirical log-tail falls at least linearly. The decay rate checked is
//    the one the analytic bound guarantees, 0.1 ln sigma per unit of ell.
Verdict tail_decay() {
  Verdict v;
  ExperimentConfig cfg = monte_carlo(2, 1000, 100000, kSeed + 6);
  for (std::size_t ell = 1; ell <= 40; ++ell) cfg.ell_grid.push_back(ell);
  const ExperimentReport r = run_experiment(cfg);
  std::size_t bound_fail = 0;
  for (const TailRow& t : r.tail) bound_fail += t.empirical <= t.bound + kSE * t.se ? 0 : 1;
  v.require(bound_fail == 0, fmt("%zu tail rows above bound", bound_fail));

  // Observed support: ell with at least 30 exceedances, so ln P is stable.
  const double rate = 0.1 * std::log(2.0);
  std::vector<double> xs, ys;
  for (const TailRow& t : r.tail) {
    if (t.count < 30) break;
    xs.push_back(static_cast<double>(t.ell));
    ys.push_back(std::log(t.empirical));
  }
  v.require(xs.size() >= 5, fmt("support too short (%zu)", xs.size()));
  std::size_t above_line = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const TailRow& t = r.tail[k];
    const double slack = kSE * t.se / t.empirical;  // delta method on ln P
    if (ys[k] > ys[0] - rate * (xs[k] - xs[0]) + slack) ++above_line;
  }
  v.require(above_line == 0, fmt("%zu points above the decay line", above_line));
  double slope = 0.0;
  if (xs.size() >= 2) {
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      sxy += (xs[k] - mx) * (ys[k] - my);
      sxx += (xs[k] - mx) * (xs[k] - mx);
    }
    slope = sxy / sxx;
  }
  v.require(slope <= -rate, fmt("log-tail slope %.4f > -%.4f", slope, rate));
  v.detail += fmt("%s40 rows within bound, support ell<=%zu, log-tail slope %.4f (need <= -%.4f)",
                  v.detail.empty() ? "" : " | ", xs.size(), slope, rate);
  return v;
}

// 7. n = 4096, d = threshold_d = 288: at most 5 fallbacks in 1e4 trials,
//    exact values, and work outside the S' period call <= c d per
//    no-fallback trial.
Verdict reduction_fallback() {
  constexpr double kWorkConstant = 256.0;
  Verdict v;
  const std::size_t n = 4096;
  const std::size_t d = threshold_d(2, n);
  v.require(d == 288, fmt("d = %zu", d));
  const RngSpec rng{kSeed + 7};
  const ReductionConfig cfg = ReductionConfig::with_d(d);
  std::size_t fallbacks = 0, wrong = 0, over_budget = 0;
  double max_work = 0.0, sum_work = 0.0;
  const std::size_t trials = 10000;
  for (std::size_t k = 0; k < trials; ++k) {
    const SymbolString s = sample_string(2, n, rng.trial_seed(k));
    const ReductionOutcome o = unbordered_via_period(s, cfg);
    if (o.value != scan_L(s).length) ++wrong;
    if (o.fallback_used) {
      ++fallbacks;
      continue;
    }
    const double per_d = static_cast<double>(o.symbols_touched) / static_cast<double>(d);
    max_work = std::max(max_work, per_d);
    sum_work += per_d;
    if (per_d > kWorkConstant) ++over_budget;
  }
  v.require(fallbacks <= 5, fmt("%zu fallbacks", fallbacks));
  v.require(wrong == 0, fmt("%zu wrong values", wrong));
  v.require(over_budget == 0, fmt("%zu trials over %.0f d", over_budget, kWorkConstant));
  const std::size_t clean = trials - fallbacks;
  v.detail += fmt("%sd=%zu fallbacks=%zu/%zu, work/d mean %.1f max %.1f (c=%.0f)",
                  v.detail.empty() ? "" : " | ", d, fallbacks, trials,
                  clean ? sum_work / clean : 0.0, max_work, kWorkConstant);
  return v;
}

// 8. C(t) within 1e-9 relative of a 50-digit reference on 1000-point grids;
//    denominator positive throughout.
Verdict bounds_numerics() {
  using big = boost::multiprecision::cpp_dec_float_50;
  Verdict v;
  double worst = 0.0;
  std::size_t non_positive = 0;
  for (std::uint64_t sigma : {2ull, 3ull, 16ull, 1ull << 20}) {
    const double hi = bounds::max_t(sigma);
    for (int k = 0; k < 1000; ++k) {
      const double t = hi * k / 999.0;
      const big s(sigma);
      const big x = boost::multiprecision::exp(big(2) * big(t));
      const big den = s * s * s - big(2) * s * s * x + x * x;
      const big ref = (s * s * s - s * s * x) / den;
      const double got = bounds::c_bound(sigma, t);
      const double rel = static_cast<double>(boost::multiprecision::abs((big(got) - ref) / ref));
      worst = std::max(worst, rel);
      if (!(bounds::c_denominator(sigma, t) > 0.0) || den <= 0) ++non_positive;
    }
  }
  v.require(worst <= 1e-9, fmt("max relative error %.3g", worst));
  v.require(non_positive == 0, fmt("%zu non-positive denominators", non_positive));
  v.detail += fmt("%smax relative error %.3g over 4000 points, denominators positive",
                  v.detail.empty() ? "" : " | ", worst);
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
  };
  const Criterion criteria[] = {
      {"1 worked example", worked_example},
      {"2 exhaustive oracle equivalence", exhaustive_oracle},
      {"3 sentinel identity", sentinel_identity},
      {"4 MGF below C(t)", lemma_mgf},
      {"5 expectation sandwich and n-stationarity", expectation_sandwich},
      {"6 exponential tail", tail_decay},
      {"7 reduction fallback rate and work", reduction_fallback},
      {"8 C(t) numerics", bounds_numerics},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = Clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %-45s %6.2fs  %s\n", v.pass ? "PASS" : "FAIL", c.name, seconds_since(t0),
                v.detail.c_str());
    std::fflush(stdout);
    failed += v.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
