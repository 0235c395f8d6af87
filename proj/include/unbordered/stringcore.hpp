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

#ifndef UNBORDERED_STRINGCORE_HPP
#define UNBORDERED_STRINGCORE_HPP

#include <cstddef>
#include <vector>

#include "unbordered/error.hpp"
#include "unbordered/symbol_string.hpp"

namespace unbordered {

/**
 * Border array of a string: for every prefix length m in [1, n], the length
 * of the longest proper border of S[1, m].
 *
 * Invariants: 0 <= border(m) < m and border(m + 1) <= border(m) + 1.
 */
class FailureTable {
 public:
  FailureTable() = default;
  explicit FailureTable(std::vector<std::size_t> pi) : pi_(std::move(pi)) {}

  std::size_t size() const noexcept { return pi_.size(); }

  /// Longest proper border of the length-m prefix, 1 <= m <= size().
  std::size_t border(std::size_t m) const { return pi_.at(m - 1); }

  /// Raw table; entry k belongs to the prefix of length k + 1.
  const std::vector<std::size_t>& values() const noexcept { return pi_; }

  friend bool operator==(const FailureTable&, const FailureTable&) = default;

 private:
  std::vector<std::size_t> pi_;
};

namespace detail {

inline void require_nonempty(symbol_view s, const char* op) {
  if (s.empty()) throw error(errc::empty_input, std::string(op) + " needs a non-empty string");
}

}  // namespace detail

/// Morris-Pratt border array in O(n). Alphabet-agnostic: only symbol equality
/// is used, so sentinel-extended strings need no special handling.
inline FailureTable failure_table(symbol_view s) {
  detail::require_nonempty(s, "failure_table");
  std::vector<std::size_t> pi(s.size(), 0);
  std::size_t b = 0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    while (b > 0 && s[k] != s[b]) b = pi[b - 1];
    if (s[k] == s[b]) ++b;
    pi[k] = b;
  }
  return FailureTable(std::move(pi));
}

/// per(S); 0 for the empty string.
inline std::size_t shortest_period(symbol_view s) {
  if (s.empty()) return 0;
  return s.size() - failure_table(s).border(s.size());
}

inline std::size_t longest_border(symbol_view s) {
  detail::require_nonempty(s, "longest_border");
  return failure_table(s).border(s.size());
}

inline bool is_unbordered(symbol_view s) {
  detail::require_nonempty(s, "is_unbordered");
  return longest_border(s) == 0;
}

/// Shortest border length; equals |s| when s is unbordered. The border chain
/// pi[n], pi[pi[n]], ... enumerates every proper border, so its last non-zero
/// element is the shortest one.
inline std::size_t shortest_border(symbol_view s) {
  detail::require_nonempty(s, "shortest_border");
  const FailureTable pi = failure_table(s);
  std::size_t b = pi.border(s.size());
  if (b == 0) return s.size();
  while (pi.border(b) > 0) b = pi.border(b);
  return b;
}

}  // namespace unbordered

#endif  // UNBORDERED_STRINGCORE_HPP
