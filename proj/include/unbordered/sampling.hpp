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

#ifndef UNBORDERED_SAMPLING_HPP
#define UNBORDERED_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "unbordered/error.hpp"
#include "unbordered/symbol_string.hpp"

namespace unbordered {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seeding rule for trial `index` of an experiment; depends only on the pair,
/// so trials may run in any order or on any thread.
struct RngSpec {
  std::uint64_t master_seed = 0;

  constexpr std::uint64_t trial_seed(std::uint64_t index) const noexcept {
    return mix64(master_seed ^ mix64(index));
  }
};

/// Uniformly random string of length n over {0, ..., sigma - 1}.
inline SymbolString sample_string(std::uint32_t sigma, std::size_t n, std::uint64_t seed) {
  if (sigma < 1) throw error(errc::alphabet_too_small, "sigma must be at least 1");
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<symbol> dist(0, sigma - 1);
  std::vector<symbol> symbols(n);
  for (auto& x : symbols) x = dist(gen);
  return SymbolString(AlphabetSpec(sigma), std::move(symbols));
}

}  // namespace unbordered

#endif  // UNBORDERED_SAMPLING_HPP
