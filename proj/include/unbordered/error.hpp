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

#ifndef UNBORDERED_ERROR_HPP
#define UNBORDERED_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace unbordered {

enum class errc {
  empty_input,
  alphabet_too_small,
  out_of_domain,
  invalid_symbol,
  unknown_algorithm,
  unknown_format,
  parse_error,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::empty_input: return "EmptyInput";
    case errc::alphabet_too_small: return "AlphabetTooSmall";
    case errc::out_of_domain: return "OutOfDomain";
    case errc::invalid_symbol: return "InvalidSymbol";
    case errc::unknown_algorithm: return "UnknownAlgorithm";
    case errc::unknown_format: return "UnknownFormat";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Domain error raised by every operation in the library. The code is the
/// stable, machine-checkable part; the message is for humans.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace unbordered

#endif  // UNBORDERED_ERROR_HPP
