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

#ifndef UNBORDERED_REPORT_HPP
#define UNBORDERED_REPORT_HPP

#include <sstream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "unbordered/error.hpp"
#include "unbordered/experiment.hpp"

namespace unbordered {

enum class ReportFormat { csv, json };

inline ReportFormat parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  throw error(errc::unknown_format, std::string(name));
}

inline constexpr std::string_view kTrialCsvHeader = "trial,delta,l,per,f,fallback";

inline nlohmann::ordered_json report_to_json(const ExperimentReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["sigma"] = r.sigma;
  j["n"] = r.n;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["algo"] = std::string(to_string(r.algo));
  j["d"] = r.d;
  j["d_forced"] = r.d_forced;
  j["mean_delta"] = r.mean_delta;
  j["se_delta"] = r.se_delta;
  j["expectation_bound"] = r.expectation_bound;
  j["lower_bound"] = r.lower_bound;
  j["expectation_pass"] = r.expectation_pass;
  ordered_json tail = ordered_json::array();
  for (const auto& t : r.tail) {
    tail.push_back({{"ell", t.ell}, {"count", t.count}, {"empirical", t.empirical},
                    {"se", t.se}, {"bound", t.bound}, {"pass", t.pass}});
  }
  j["tail"] = std::move(tail);
  ordered_json mgf = ordered_json::array();
  for (const auto& m : r.mgf) {
    mgf.push_back({{"t", m.t}, {"empirical", m.empirical}, {"se", m.se},
                   {"bound", m.bound}, {"pass", m.pass}});
  }
  j["mgf"] = std::move(mgf);
  j["fallback_count"] = r.fallback_count;
  j["fallback_limit"] = r.fallback_limit;
  j["fallback_pass"] = r.fallback_pass;
  j["audited"] = r.audited;
  j["audit_mismatches"] = r.audit_mismatches;
  j["all_passed"] = r.all_passed();
  j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

/// CSV: one row per trial under kTrialCsvHeader. JSON: the summary, without
/// per-trial records.
inline std::string emit_report(const ExperimentReport& r, ReportFormat format) {
  if (format == ReportFormat::json) return report_to_json(r).dump() + "\n";
  std::ostringstream os;
  os << kTrialCsvHeader << '\n';
  for (const auto& t : r.records) {
    os << t.trial_index << ',' << t.delta << ',' << t.l_value << ',' << t.per_value << ','
       << t.f_value << ',' << (t.fallback_used ? "true" : "false") << '\n';
  }
  return os.str();
}

inline std::string emit_report(const ExperimentReport& r, std::string_view format) {
  return emit_report(r, parse_report_format(format));
}

/// Inverse of the JSON summary; records are left empty.
inline ExperimentReport parse_report_json(std::string_view text) {
  ExperimentReport r;
  try {
    const auto j = nlohmann::json::parse(text);
    r.sigma = j.at("sigma").get<std::uint32_t>();
    r.n = j.at("n").get<std::size_t>();
    r.trials = j.at("trials").get<std::size_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.algo = parse_l_algorithm(j.at("algo").get<std::string>());
    r.d = j.at("d").get<std::size_t>();
    r.d_forced = j.at("d_forced").get<bool>();
    r.mean_delta = j.at("mean_delta").get<double>();
    r.se_delta = j.at("se_delta").get<double>();
    r.expectation_bound = j.at("expectation_bound").get<double>();
    r.lower_bound = j.at("lower_bound").get<double>();
    r.expectation_pass = j.at("expectation_pass").get<bool>();
    for (const auto& t : j.at("tail")) {
      r.tail.push_back({t.at("ell").get<std::size_t>(), t.at("count").get<std::size_t>(),
                        t.at("empirical").get<double>(), t.at("se").get<double>(),
                        t.at("bound").get<double>(), t.at("pass").get<bool>()});
    }
    for (const auto& m : j.at("mgf")) {
      r.mgf.push_back({m.at("t").get<double>(), m.at("empirical").get<double>(),
                       m.at("se").get<double>(), m.at("bound").get<double>(),
                       m.at("pass").get<bool>()});
    }
    r.fallback_count = j.at("fallback_count").get<std::size_t>();
    r.fallback_limit = j.at("fallback_limit").get<double>();
    r.fallback_pass = j.at("fallback_pass").get<bool>();
    r.audited = j.at("audited").get<std::size_t>();
    r.audit_mismatches = j.at("audit_mismatches").get<std::size_t>();
    r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw error(errc::parse_error, e.what());
  }
  return r;
}

}  // namespace unbordered

#endif  // UNBORDERED_REPORT_HPP
