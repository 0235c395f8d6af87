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

// Command-line front end: gen, analyze, lfactor, period, experiment, bounds.
//
// Exit codes: 0 success, 1 usage error, 2 domain error, 3 failed check.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "unbordered/unbordered_all.hpp"

namespace {

using namespace unbordered;
using nlohmann::ordered_json;

constexpr int kExitDomain = 2;
constexpr int kExitCheck = 3;

struct InputOptions {
  std::string file;
  std::string text;
  std::optional<std::uint32_t> sigma;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--file,-f", in.file, "Read strings from a text or sigma=<k> integer file");
  cmd->add_option("string", in.text, "String over 0-9a-zA-Z");
  cmd->add_option("--sigma", in.sigma, "Alphabet size");
}

std::vector<SymbolString> load_inputs(const InputOptions& in) {
  if (!in.file.empty()) {
    std::ifstream f(in.file);
    if (!f) throw error(errc::parse_error, "cannot open " + in.file);
    return read_strings(f, in.sigma);
  }
  if (in.text.empty()) throw error(errc::empty_input, "no input string given");
  return {in.sigma ? from_text(in.text, AlphabetSpec(*in.sigma)) : from_text(in.text)};
}

ordered_json span_json(const std::optional<FactorSpan>& span) {
  if (!span) return nullptr;
  return ordered_json::array({span->start, span->end});
}

void print_line(const ordered_json& j) { std::cout << j.dump() << '\n'; }

std::vector<std::size_t> parse_grid(const std::string& csv) {
  std::vector<std::size_t> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      out.push_back(std::stoul(tok));
    } catch (const std::exception&) {
      throw error(errc::parse_error, "bad grid entry '" + tok + "'");
    }
  }
  return out;
}

int run_analyze(const InputOptions& in) {
  for (const SymbolString& s : load_inputs(in)) {
    const UnborderedResult r = scan_L(s);
    ordered_json j;
    j["n"] = s.size();
    j["L"] = r.length;
    j["witness"] = span_json(r.witness);
    j["per"] = shortest_period(s);
    j["F"] = shortest_border(s);
    print_line(j);
  }
  return 0;
}

struct ReductionOptions {
  std::optional<std::size_t> d;
  double d_factor = 10.0;
};

int run_lfactor(const InputOptions& in, const std::string& algo, const ReductionOptions& ro) {
  const LAlgorithm a = parse_l_algorithm(algo);
  for (const SymbolString& s : load_inputs(in)) {
    ordered_json j;
    j["n"] = s.size();
    if (a == LAlgorithm::reduction) {
      const ReductionConfig cfg =
          ro.d ? ReductionConfig::with_d(*ro.d)
               : ReductionConfig::for_length(s.alphabet().sigma, std::max<std::size_t>(s.size(), 1),
                                             ro.d_factor);
      const ReductionOutcome o = unbordered_via_period(s, cfg);
      j["value"] = o.value;
      j["fallback"] = o.fallback_used;
      j["d"] = o.d;
      j["witness"] = span_json(o.factor);
    } else {
      const UnborderedResult r = a == LAlgorithm::brute ? brute_force_L(s) : scan_L(s);
      j["value"] = r.length;
      j["fallback"] = false;
      j["d"] = nullptr;
      j["witness"] = span_json(r.witness);
    }
    print_line(j);
  }
  return 0;
}

int run_period(const InputOptions& in, const std::string& algo) {
  if (algo != "mp" && algo != "via-unbordered") throw error(errc::unknown_algorithm, algo);
  for (const SymbolString& s : load_inputs(in)) {
    ordered_json j;
    j["n"] = s.size();
    if (algo == "mp") {
      j["value"] = shortest_period(s);
      j["fallback"] = false;
      j["d"] = nullptr;
      j["witness"] = nullptr;
    } else {
      const ReductionOutcome o = period_via_unbordered(s);
      j["value"] = o.value;
      j["fallback"] = false;
      j["d"] = nullptr;
      j["witness"] = span_json(o.factor);
    }
    print_line(j);
  }
  return 0;
}

int run_gen(std::uint32_t sigma, std::size_t length, std::size_t count, std::uint64_t seed,
            const std::string& format) {
  if (format != "text" && format != "int") throw error(errc::unknown_format, format);
  if (format == "text" && sigma > kTextAlphabetLimit) {
    throw error(errc::out_of_domain, "text output supports sigma <= 62; use --format int");
  }
  const RngSpec rng{seed};
  if (format == "int") std::cout << "sigma=" << sigma << '\n';
  for (std::size_t k = 0; k < count; ++k) {
    const SymbolString s = sample_string(sigma, length, rng.trial_seed(k));
    if (format == "int") {
      write_integers(std::cout, s);
    } else {
      write_text(std::cout, s);
    }
  }
  return 0;
}

struct ExperimentOptions {
  std::uint32_t sigma = 2;
  std::size_t length = 1000;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::string algo = "scan";
  std::string out;
  std::string format = "json";
  std::string ell_grid;
  bool check = false;
  unsigned threads = 0;
  std::optional<std::size_t> d;
  double d_factor = 10.0;
};

int run_experiment_cmd(const ExperimentOptions& o) {
  ExperimentConfig cfg;
  cfg.sigma = o.sigma;
  cfg.n = o.length;
  cfg.trials = o.trials;
  cfg.rng = RngSpec{o.seed};
  cfg.algo = parse_l_algorithm(o.algo);
  cfg.threads = o.threads;
  cfg.forced_d = o.d;
  cfg.d_factor = o.d_factor;
  if (!o.ell_grid.empty()) cfg.ell_grid = parse_grid(o.ell_grid);
  const ReportFormat format = parse_report_format(o.format);

  const ExperimentReport rep = run_experiment(cfg);
  const std::string body = emit_report(rep, format);
  if (o.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(o.out);
    if (!f) throw error(errc::parse_error, "cannot write " + o.out);
    f << body;
    std::cout << emit_report(rep, ReportFormat::json);
  }
  if (o.check && !rep.all_passed()) {
    std::cerr << "experiment check failed\n";
    return kExitCheck;
  }
  return 0;
}

int run_bounds(std::uint32_t sigma, std::size_t n, const std::string& grid_csv,
               const std::string& format) {
  const std::vector<std::size_t> grid =
      grid_csv.empty() ? std::vector<std::size_t>{1, 2, 4, 8, 16, 32, 64} : parse_grid(grid_csv);
  const bounds::Minimum best = bounds::optimize_expectation(sigma);
  const double c_star = bounds::c_bound(sigma, best.t);
  const double lower = bounds::delta_lower_bound(sigma, n);
  const std::size_t d = threshold_d(sigma, std::max<std::size_t>(n, 1));

  if (format == "json") {
    ordered_json j;
    j["sigma"] = sigma;
    j["n"] = n;
    j["t_max"] = bounds::max_t(sigma);
    j["t_star"] = best.t;
    j["c_t_star"] = c_star;
    j["c_t_max"] = bounds::c_bound(sigma, bounds::max_t(sigma));
    j["expectation_bound"] = best.value;
    j["lower_bound"] = lower;
    j["threshold_d"] = d;
    ordered_json rows = ordered_json::array();
    for (std::size_t ell : grid) rows.push_back({{"ell", ell}, {"tail_bound", bounds::tail_bound(sigma, ell)}});
    j["tail"] = std::move(rows);
    print_line(j);
  } else if (format == "csv") {
    std::cout << std::setprecision(17);
    std::cout << "quantity,ell,value\n";
    std::cout << "t_star,," << best.t << '\n';
    std::cout << "c_t_star,," << c_star << '\n';
    std::cout << "expectation_bound,," << best.value << '\n';
    std::cout << "lower_bound,," << lower << '\n';
    std::cout << "threshold_d,," << d << '\n';
    for (std::size_t ell : grid) std::cout << "tail_bound," << ell << ',' << bounds::tail_bound(sigma, ell) << '\n';
  } else if (format == "table") {
    std::cout << std::setprecision(10);
    std::cout << "sigma              " << sigma << '\n'
              << "t*                 " << best.t << '\n'
              << "C(t*)              " << c_star << '\n'
              << "E[n-L] <=          " << best.value << '\n'
              << "E[n-L] >=          " << lower << "  (n = " << n << ")\n"
              << "threshold d        " << d << '\n'
              << "ell    P(n-L >= ell) <=\n";
    for (std::size_t ell : grid) {
      std::cout << std::left << std::setw(7) << ell << bounds::tail_bound(sigma, ell) << '\n';
    }
  } else {
    throw error(errc::unknown_format, format);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal unbordered factors, shortest periods, and their average-case bounds"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Print uniformly random strings");
  std::uint32_t gen_sigma = 2;
  std::size_t gen_length = 16, gen_count = 1;
  std::uint64_t gen_seed = 1;
  std::string gen_format = "text";
  gen->add_option("--sigma", gen_sigma)->required();
  gen->add_option("--length", gen_length)->required();
  gen->add_option("--count", gen_count);
  gen->add_option("--seed", gen_seed);
  gen->add_option("--format", gen_format, "text|int");

  InputOptions analyze_in;
  auto* analyze = app.add_subcommand("analyze", "L(S), a witness, per(S) and F(S) as JSON");
  add_input_options(analyze, analyze_in);

  InputOptions lf_in;
  std::string lf_algo = "scan";
  ReductionOptions lf_red;
  auto* lfactor = app.add_subcommand("lfactor", "Maximal unbordered factor");
  add_input_options(lfactor, lf_in);
  lfactor->add_option("--algo", lf_algo, "brute|scan|reduction");
  lfactor->add_option("--d", lf_red.d, "Force the reduction threshold d");
  lfactor->add_option("--d-factor", lf_red.d_factor, "Constant in the d formula");

  InputOptions per_in;
  std::string per_algo = "mp";
  auto* period = app.add_subcommand("period", "Shortest period");
  add_input_options(period, per_in);
  period->add_option("--algo", per_algo, "mp|via-unbordered");

  ExperimentOptions ex;
  auto* experiment = app.add_subcommand("experiment", "Monte Carlo study of n - L(S)");
  experiment->add_option("--sigma", ex.sigma)->required();
  experiment->add_option("--length", ex.length)->required();
  experiment->add_option("--trials", ex.trials);
  experiment->add_option("--seed", ex.seed);
  experiment->add_option("--algo", ex.algo, "brute|scan|reduction");
  experiment->add_option("--out", ex.out, "Write the report here instead of stdout");
  experiment->add_option("--format", ex.format, "csv|json");
  experiment->add_option("--ell-grid", ex.ell_grid, "Comma-separated tail thresholds");
  experiment->add_option("--threads", ex.threads);
  experiment->add_option("--d", ex.d, "Force the reduction threshold d");
  experiment->add_option("--d-factor", ex.d_factor, "Constant in the d formula");
  experiment->add_flag("--check", ex.check, "Exit 3 unless every comparison passes");

  std::uint32_t b_sigma = 2;
  std::size_t b_n = 1000;
  std::string b_grid, b_format = "table";
  auto* bnd = app.add_subcommand("bounds", "Evaluate the analytic bounds");
  bnd->add_option("--sigma", b_sigma)->required();
  bnd->add_option("--n", b_n);
  bnd->add_option("--ell-grid", b_grid, "Comma-separated tail thresholds");
  bnd->add_option("--format", b_format, "table|csv|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*gen) return run_gen(gen_sigma, gen_length, gen_count, gen_seed, gen_format);
    if (*analyze) return run_analyze(analyze_in);
    if (*lfactor) return run_lfactor(lf_in, lf_algo, lf_red);
    if (*period) return run_period(per_in, per_algo);
    if (*experiment) return run_experiment_cmd(ex);
    if (*bnd) return run_bounds(b_sigma, b_n, b_grid, b_format);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return 1;
}
