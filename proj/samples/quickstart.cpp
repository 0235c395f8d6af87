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

// Computes L(S), per(S) and both reductions for a string given on the
// command line (default: the classic 1011001101).

#include <iostream>

#include "unbordered/unbordered_all.hpp"

int main(int argc, char** argv) {
  using namespace unbordered;
  const SymbolString s = from_text(argc > 1 ? argv[1] : "1011001101");

  const UnborderedResult l = scan_L(s);
  std::cout << "S      = " << to_text(s) << '\n'
            << "L(S)   = " << l.length << "  witness [" << l.witness.start << ", "
            << l.witness.end << "] = " << to_text(s.factor(l.witness)) << '\n'
            << "per(S) = " << shortest_period(s) << '\n'
            << "F(S)   = " << shortest_border(s) << '\n';

  std::cout << "maximal unbordered factors:";
  for (const FactorSpan& f : maximal_factors(s)) std::cout << " [" << f.start << ", " << f.end << "]";
  std::cout << '\n';

  const ReductionOutcome p = period_via_unbordered(s);
  std::cout << "S_$    = " << to_text(*p.sentinel_string) << "  -> per(S) = " << p.value << '\n';

  const ReductionOutcome u =
      unbordered_via_period(s, ReductionConfig::for_length(s.alphabet().sigma, s.size()));
  std::cout << "L via period reduction = " << u.value << " (d = " << u.d
            << (u.witness ? ", reduction path" : ", direct path") << ")\n";
}
