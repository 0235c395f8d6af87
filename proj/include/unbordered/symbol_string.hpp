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

#ifndef UNBORDERED_SYMBOL_STRING_HPP
#define UNBORDERED_SYMBOL_STRING_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unbordered/error.hpp"

namespace unbordered {

using symbol = std::uint32_t;
using symbol_view = std::span<const symbol>;

/// Integer alphabet {0, ..., sigma - 1}.
struct AlphabetSpec {
  std::uint32_t sigma = 2;

  constexpr explicit AlphabetSpec(std::uint32_t k = 2) : sigma(k) {}

  constexpr bool contains(symbol s) const noexcept { return s < sigma; }

  /// Symbol value reserved as the out-of-alphabet sentinel.
  constexpr symbol sentinel() const noexcept { return sigma; }

  friend constexpr bool operator==(AlphabetSpec, AlphabetSpec) = default;
};

/// Factor S[start, end] with 1-based inclusive indices.
struct FactorSpan {
  std::size_t start = 1;
  std::size_t end = 1;

  constexpr std::size_t length() const noexcept { return end - start + 1; }

  constexpr bool valid_for(std::size_t n) const noexcept {
    return 1 <= start && start <= end && end <= n;
  }

  friend constexpr bool operator==(const FactorSpan&, const FactorSpan&) = default;
};

/// View of S[span.start, span.end]; the 1-based span is translated to the
/// 0-based storage here and nowhere else.
inline symbol_view factor_of(symbol_view s, FactorSpan span) {
  if (!span.valid_for(s.size())) {
    throw error(errc::out_of_domain,
                "factor [" + std::to_string(span.start) + "," +
                    std::to_string(span.end) + "] outside string of length " +
                    std::to_string(s.size()));
  }
  return s.subspan(span.start - 1, span.length());
}

class SymbolString {
 public:
  SymbolString() : alphabet_(2) {}

  SymbolString(AlphabetSpec alphabet, std::vector<symbol> symbols)
      : alphabet_(alphabet), symbols_(std::move(symbols)) {
    if (alphabet_.sigma < 1) {
      throw error(errc::alphabet_too_small, "sigma must be at least 1");
    }
    for (std::size_t k = 0; k < symbols_.size(); ++k) {
      if (!alphabet_.contains(symbols_[k])) {
        throw error(errc::invalid_symbol,
                    "symbol " + std::to_string(symbols_[k]) + " at position " +
                        std::to_string(k + 1) + " outside alphabet of size " +
                        std::to_string(alphabet_.sigma));
      }
    }
  }

  AlphabetSpec alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

  symbol_view view() const noexcept { return symbols_; }
  operator symbol_view() const noexcept { return symbols_; }

  const std::vector<symbol>& symbols() const noexcept { return symbols_; }

  /// 1-based access, S[i].
  symbol at(std::size_t i) const { return factor_of(view(), {i, i})[0]; }

  symbol_view factor(FactorSpan span) const { return factor_of(view(), span); }

  friend bool operator==(const SymbolString&, const SymbolString&) = default;

 private:
  AlphabetSpec alphabet_;
  std::vector<symbol> symbols_;
};

// Text mapping: '0'-'9' -> 0..9, 'a'-'z' -> 10..35, 'A'-'Z' -> 36..61.
// Any symbol past 61 renders as '$' (used for sentinels).
inline constexpr std::uint32_t kTextAlphabetLimit = 62;

constexpr int symbol_from_char(char c) noexcept {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return 10 + (c - 'a');
  if (c >= 'A' && c <= 'Z') return 36 + (c - 'A');
  return -1;
}

constexpr char char_from_symbol(symbol s) noexcept {
  if (s < 10) return static_cast<char>('0' + s);
  if (s < 36) return static_cast<char>('a' + (s - 10));
  if (s < 62) return static_cast<char>('A' + (s - 36));
  return '$';
}

inline std::vector<symbol> symbols_from_text(std::string_view text) {
  std::vector<symbol> out;
  out.reserve(text.size());
  for (char c : text) {
    const int v = symbol_from_char(c);
    if (v < 0) {
      throw error(errc::invalid_symbol,
                  std::string("character '") + c + "' has no symbol mapping");
    }
    out.push_back(static_cast<symbol>(v));
  }
  return out;
}

/// Parses text under an explicit alphabet.
inline SymbolString from_text(std::string_view text, AlphabetSpec alphabet) {
  return SymbolString(alphabet, symbols_from_text(text));
}

/// Parses text and takes the smallest alphabet that covers it (at least 2).
inline SymbolString from_text(std::string_view text) {
  auto symbols = symbols_from_text(text);
  symbol top = 1;
  for (symbol s : symbols) top = std::max(top, s);
  return SymbolString(AlphabetSpec(top + 1), std::move(symbols));
}

inline std::string to_text(symbol_view s) {
  std::string out;
  out.reserve(s.size());
  for (symbol x : s) out.push_back(char_from_symbol(x));
  return out;
}

}  // namespace unbordered

#endif  // UNBORDERED_SYMBOL_STRING_HPP
