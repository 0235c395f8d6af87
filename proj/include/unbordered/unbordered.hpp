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

#ifndef UNBORDERED_UNBORDERED_HPP
#define UNBORDERED_UNBORDERED_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "unbordered/error.hpp"
#include "unbordered/stringcore.hpp"
#include "unbordered/symbol_string.hpp"

namespace unbordered {

enum class LAlgorithm { brute, scan, reduction };

constexpr std::string_view to_string(LAlgorithm a) noexcept {
  switch (a) {
    case LAlgorithm::brute: return "brute";
    case LAlgorithm::scan: return "scan";
    case LAlgorithm::reduction: return "reduction";
  }
  return "?";
}

inline LAlgorithm parse_l_algorithm(std::string_view name) {
  if (name == "brute") return LAlgorithm::brute;
  if (name == "scan") return LAlgorithm::scan;
  if (name == "reduction") return LAlgorithm::reduction;
  throw error(errc::unknown_algorithm, std::string(name));
}

/// L(S) together with one maximal unbordered factor.
struct UnborderedResult {
  std::size_t length = 0;
  FactorSpan witness;
  LAlgorithm algorithm = LAlgorithm::scan;

  friend bool operator==(const UnborderedResult&, const UnborderedResult&) = default;
};

/// Instrumentation for scan_L.
struct ScanStats {
  std::size_t starts = 0;           // start positions processed
  std::size_t symbols_touched = 0;  // total length of suffixes scanned
};

namespace detail {

// Length of the longest unbordered prefix: the largest m with pi[m] = 0.
inline std::size_t longest_unbordered_prefix(symbol_view s) {
  const FailureTable table = failure_table(s);
  const auto& pi = table.values();
  std::size_t m = pi.size();
  while (pi[m - 1] != 0) --m;
  return m;
}

}  // namespace detail

/// Ground-truth L(S): longest unbordered prefix of every suffix, no early
/// exit. O(n^2); meant for n up to a few thousand.
inline UnborderedResult brute_force_L(symbol_view s) {
  detail::require_nonempty(s, "brute_force_L");
  const std::size_t n = s.size();
  UnborderedResult best{0, {1, 1}, LAlgorithm::brute};
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t m = detail::longest_unbordered_prefix(s.subspan(i - 1));
    if (m > best.length) best = {m, {i, i + m - 1}, LAlgorithm::brute};
  }
  return best;
}

/// L(S) in O(n (n - L(S) + 1)) worst-case time.
///
/// Starts are tried left to right; the scan stops once the remaining suffix
/// is no longer than the best factor found, so at most n - L(S) + 1 starts
/// run. Returns the leftmost maximal unbordered factor.
inline UnborderedResult scan_L(symbol_view s, ScanStats* stats = nullptr) {
  detail::require_nonempty(s, "scan_L");
  const std::size_t n = s.size();
  UnborderedResult best{0, {1, 1}, LAlgorithm::scan};
  for (std::size_t i = 1; n - i + 1 > best.length; ++i) {
    const symbol_view suffix = s.subspan(i - 1);
    const std::size_t m = detail::longest_unbordered_prefix(suffix);
    if (stats) {
      ++stats->starts;
      stats->symbols_touched += suffix.size();
    }
    if (m > best.length) best = {m, {i, i + m - 1}, LAlgorithm::scan};
  }
  return best;
}

/// All maximal unbordered factors, left to right. O(n^2).
inline std::vector<FactorSpan> maximal_factors(symbol_view s) {
  const std::size_t ell = brute_force_L(s).length;
  std::vector<FactorSpan> out;
  for (std::size_t i = 1; i + ell - 1 <= s.size(); ++i) {
    if (failure_table(s.subspan(i - 1, ell)).border(ell) == 0) {
      out.push_back({i, i + ell - 1});
    }
  }
  return out;
}

}  // namespace unbordered

#endif  // UNBORDERED_UNBORDERED_HPP
