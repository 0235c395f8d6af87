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

#ifndef UNBORDERED_IO_HPP
#define UNBORDERED_IO_HPP

// String files come in two flavours:
//
//   text     one string per line, symbols as characters 0-9a-zA-Z
//   integer  a `sigma=<k>` header line, then one string per line as
//            whitespace-separated symbol values
//
// Blank lines are skipped in both.

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "unbordered/error.hpp"
#include "unbordered/symbol_string.hpp"

namespace unbordered {

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

/// Reads every string in `in`. In text mode the alphabet is `sigma` when
/// given, otherwise the smallest one covering each line.
inline std::vector<SymbolString> read_strings(std::istream& in,
                                              std::optional<std::uint32_t> sigma = {}) {
  std::vector<SymbolString> out;
  std::string line;
  std::optional<std::uint32_t> int_sigma;
  bool first = true;
  while (std::getline(in, line)) {
    line = detail::trim(line);
    if (line.empty()) continue;
    if (first && line.rfind("sigma=", 0) == 0) {
      first = false;
      try {
        int_sigma = static_cast<std::uint32_t>(std::stoul(line.substr(6)));
      } catch (const std::exception&) {
        throw error(errc::parse_error, "bad header '" + line + "'");
      }
      if (sigma && *sigma != *int_sigma) {
        throw error(errc::parse_error, "header sigma disagrees with requested sigma");
      }
      continue;
    }
    first = false;
    if (int_sigma) {
      std::istringstream fields(line);
      std::vector<symbol> symbols;
      std::string tok;
      while (fields >> tok) {
        try {
          std::size_t used = 0;
          const unsigned long v = std::stoul(tok, &used);
          if (used != tok.size()) throw std::invalid_argument(tok);
          symbols.push_back(static_cast<symbol>(v));
        } catch (const std::exception&) {
          throw error(errc::parse_error, "bad symbol value '" + tok + "'");
        }
      }
      out.emplace_back(AlphabetSpec(*int_sigma), std::move(symbols));
    } else {
      out.push_back(sigma ? from_text(line, AlphabetSpec(*sigma)) : from_text(line));
    }
  }
  return out;
}

inline void write_text(std::ostream& os, const SymbolString& s) { os << to_text(s.view()) << '\n'; }

inline void write_integers(std::ostream& os, const SymbolString& s) {
  bool sep = false;
  for (symbol x : s.view()) {
    if (sep) os << ' ';
    os << x;
    sep = true;
  }
  os << '\n';
}

}  // namespace unbordered

#endif  // UNBORDERED_IO_HPP
