// Copyright 2026 The polycrt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string_view>

#include "polycrt/level_analysis.hpp"
#include "polycrt/polynomial.hpp"

namespace polycrt::testing {

inline const Field kF2{2};

inline Polynomial P2(std::string_view text) { return poly_parse(text, kF2); }
inline Polynomial P(std::string_view text, std::uint64_t p) {
  return poly_parse(text, Field(p));
}

// The worked F_2 example: moduli sharing x^2+1.
inline Polynomial example_m1() { return P2("x^2+1") * P2("x^6+x^3+1"); }
inline Polynomial example_m2() { return P2("x^2+1") * P2("x^9+x^7+x+1"); }
inline ModuliPairAnalysis example_pair() { return analyze_pair(example_m1(), example_m2()); }
inline Polynomial example_a() { return P2("x^15+x^11+x^7+x^6+x+1"); }

}  // namespace polycrt::testing
