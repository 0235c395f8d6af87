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

#ifndef UNBORDERED_EXPERIMENT_HPP
#define UNBORDERED_EXPERIMENT_HPP

// Monte Carlo estimation of the distribution of Delta_n = n - L(S) for
// uniformly random S, compared against the analytic bounds.
//
// Every stochastic comparison passes when empirical <= bound + 3 SE.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "unbordered/bounds.hpp"
#include "unbordered/error.hpp"
#include "unbordered/reductions.hpp"
#include "unbordered/sampling.hpp"
#include "unbordered/stringcore.hpp"
#include "unbordered/unbordered.hpp"

namespace unbordered {

inline constexpr double kSlackSE = 3.0;

struct TrialRecord {
  std::uint64_t trial_index = 0;
  std::size_t delta = 0;
  std::size_t l_value = 0;
  std::size_t per_value = 0;
  std::size_t f_value = 0;
  bool fallback_used = false;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct ExperimentConfig {
  std::uint32_t sigma = 2;
  std::size_t n = 1000;
  std::size_t trials = 1000;
  RngSpec rng;
  LAlgorithm algo = LAlgorithm::scan;
  double d_factor = 10.0;
  std::optional<std::size_t> forced_d;  // overrides threshold_d when set
  std::vector<std::size_t> ell_grid = {1, 2, 4, 8, 16, 32, 64};
  std::vector<double> t_fractions = {0.25, 0.5, 0.75, 1.0};  // of 0.1 ln sigma
  std::size_t audit_stride = 100;  // every k-th trial is checked by brute force
  std::size_t audit_max_n = 2000;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct TailRow {
  std::size_t ell = 0;
  std::size_t count = 0;
  double empirical = 0.0;
  double se = 0.0;
  double bound = 1.0;
  bool pass = true;
};

struct MgfRow {
  double t = 0.0;
  double empirical = 1.0;
  double se = 0.0;
  double bound = 1.0;
  bool pass = true;
};

struct ExperimentReport {
  std::uint32_t sigma = 2;
  std::size_t n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  LAlgorithm algo = LAlgorithm::scan;
  std::size_t d = 0;  // 0 unless algo = reduction
  bool d_forced = false;

  double mean_delta = 0.0;
  double se_delta = 0.0;
  double expectation_bound = 0.0;
  double lower_bound = 0.0;
  bool expectation_pass = true;

  std::vector<TailRow> tail;
  std::vector<MgfRow> mgf;

  std::size_t fallback_count = 0;
  double fallback_limit = 0.0;
  bool fallback_pass = true;

  std::size_t audited = 0;
  std::size_t audit_mismatches = 0;

  double elapsed_seconds = 0.0;

  std::vector<TrialRecord> records;

  bool all_passed() const {
    if (!expectation_pass || !fallback_pass || audit_mismatches != 0) return false;
    for (const auto& r : tail)
      if (!r.pass) return false;
    for (const auto& r : mgf)
      if (!r.pass) return false;
    return true;
  }
};

/// Sample mean of e^{t delta}; t must lie in [0, 0.1 ln sigma].
inline double empirical_mgf(std::span<const TrialRecord> records, std::uint32_t sigma, double t) {
  bounds::require_t(sigma, t);
  if (records.empty()) throw error(errc::empty_input, "empirical_mgf needs records");
  double sum = 0.0;
  for (const auto& r : records) sum += std::exp(t * static_cast<double>(r.delta));
  return sum / static_cast<double>(records.size());
}

/// Standard error of empirical_mgf, from the sample variance.
inline double empirical_mgf_se(std::span<const TrialRecord> records, std::uint32_t sigma,
                               double t) {
  const double mean = empirical_mgf(records, sigma, t);
  const std::size_t m = records.size();
  if (m < 2) return 0.0;
  double ss = 0.0;
  for (const auto& r : records) {
    const double dv = std::exp(t * static_cast<double>(r.delta)) - mean;
    ss += dv * dv;
  }
  return std::sqrt(ss / static_cast<double>(m - 1) / static_cast<double>(m));
}

namespace detail {

struct TrialOutput {
  TrialRecord record;
  bool audited = false;
  bool audit_ok = true;
};

inline TrialOutput run_trial(const ExperimentConfig& cfg, std::size_t d, std::uint64_t index) {
  const SymbolString s = sample_string(cfg.sigma, cfg.n, cfg.rng.trial_seed(index));
  TrialOutput out;
  TrialRecord& rec = out.record;
  rec.trial_index = index;
  switch (cfg.algo) {
    case LAlgorithm::brute: rec.l_value = brute_force_L(s).length; break;
    case LAlgorithm::scan: rec.l_value = scan_L(s).length; break;
    case LAlgorithm::reduction: {
      const ReductionOutcome o = unbordered_via_period(s, ReductionConfig::with_d(d));
      rec.l_value = o.value;
      rec.fallback_used = o.fallback_used;
      break;
    }
  }
  rec.delta = cfg.n - rec.l_value;
  rec.per_value = shortest_period(s);
  rec.f_value = shortest_border(s);
  if (cfg.audit_stride > 0 && index % cfg.audit_stride == 0 && cfg.n <= cfg.audit_max_n) {
    out.audited = true;
    out.audit_ok = brute_force_L(s).length == rec.l_value;
  }
  return out;
}

}  // namespace detail

/// Runs `cfg.trials` independent trials and aggregates them in trial order,
/// so the report does not depend on the thread count.
inline ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  bounds::require_sigma(cfg.sigma);
  if (cfg.n < 1) throw error(errc::out_of_domain, "n must be at least 1");
  if (cfg.trials < 1) throw error(errc::out_of_domain, "trials must be at least 1");

  const auto t0 = std::chrono::steady_clock::now();

  ExperimentReport rep;
  rep.sigma = cfg.sigma;
  rep.n = cfg.n;
  rep.trials = cfg.trials;
  rep.seed = cfg.rng.master_seed;
  rep.algo = cfg.algo;
  if (cfg.algo == LAlgorithm::reduction) {
    rep.d = cfg.forced_d ? *cfg.forced_d : threshold_d(cfg.sigma, cfg.n, cfg.d_factor);
    rep.d_forced = cfg.forced_d.has_value();
  }

  std::vector<detail::TrialOutput> outputs(cfg.trials);
  unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, cfg.trials));
  {
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t k; (k = next.fetch_add(1, std::memory_order_relaxed)) < cfg.trials;) {
        outputs[k] = detail::run_trial(cfg, rep.d, k);
      }
    };
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }

  rep.records.reserve(cfg.trials);
  std::uint64_t sum = 0;
  std::uint64_t sum_sq = 0;
  for (const auto& o : outputs) {
    rep.records.push_back(o.record);
    sum += o.record.delta;
    sum_sq += static_cast<std::uint64_t>(o.record.delta) * o.record.delta;
    rep.fallback_count += o.record.fallback_used ? 1 : 0;
    if (o.audited) {
      ++rep.audited;
      rep.audit_mismatches += o.audit_ok ? 0 : 1;
    }
  }

  const double m = static_cast<double>(cfg.trials);
  rep.mean_delta = static_cast<double>(sum) / m;
  if (cfg.trials > 1) {
    const double var = (static_cast<double>(sum_sq) - m * rep.mean_delta * rep.mean_delta) / (m - 1);
    rep.se_delta = std::sqrt(std::max(0.0, var) / m);
  }
  rep.expectation_bound = bounds::expectation_bound(cfg.sigma);
  rep.lower_bound = bounds::delta_lower_bound(cfg.sigma, cfg.n);
  rep.expectation_pass = rep.mean_delta <= rep.expectation_bound + kSlackSE * rep.se_delta &&
                         rep.mean_delta >= rep.lower_bound - kSlackSE * rep.se_delta;

  for (std::size_t ell : cfg.ell_grid) {
    TailRow row;
    row.ell = ell;
    for (const auto& r : rep.records) row.count += r.delta >= ell ? 1 : 0;
    row.empirical = static_cast<double>(row.count) / m;
    row.se = std::sqrt(row.empirical * (1.0 - row.empirical) / m);
    row.bound = bounds::tail_bound(cfg.sigma, ell);
    row.pass = row.empirical <= row.bound + kSlackSE * row.se;
    rep.tail.push_back(row);
  }

  const double t_hi = bounds::max_t(cfg.sigma);
  for (double frac : cfg.t_fractions) {
    MgfRow row;
    row.t = std::min(t_hi, frac * t_hi);
    row.empirical = empirical_mgf(rep.records, cfg.sigma, row.t);
    row.se = empirical_mgf_se(rep.records, cfg.sigma, row.t);
    row.bound = bounds::c_bound(cfg.sigma, row.t);
    row.pass = row.empirical <= row.bound + kSlackSE * row.se;
    rep.mgf.push_back(row);
  }

  // The 3/n^2 fallback bound only covers d from threshold_d with the
  // standard constant; forced or rescaled thresholds are reported unjudged.
  if (cfg.algo == LAlgorithm::reduction && !rep.d_forced && cfg.d_factor >= 10.0) {
    const double nn = static_cast<double>(cfg.n);
    rep.fallback_limit = std::max(3.0 / (nn * nn), 5.0 / m) * m;
    rep.fallback_pass = static_cast<double>(rep.fallback_count) <= rep.fallback_limit;
  }

  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace unbordered

#endif  // UNBORDERED_EXPERIMENT_HPP
