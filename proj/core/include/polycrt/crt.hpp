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

#include "polycrt/level_analysis.hpp"
#include "polycrt/polynomial.hpp"

namespace polycrt {

/// Residues a_i = |a|_{m_i} of one polynomial a.
struct ResiduePair {
  Polynomial a1;
  Polynomial a2;

  friend bool operator==(const ResiduePair&, const ResiduePair&) = default;
};

/// Folding polynomials: a = k_i * m_i + a_i.
struct FoldingWitness {
  Polynomial k1;
  Polynomial k2;

  friend bool operator==(const FoldingWitness&, const FoldingWitness&) = default;
};

struct Encoding {
  ResiduePair residues;
  FoldingWitness folding;
};

/// Splits a into its residues and folding polynomials for the pair.
/// Throws Error{kDegreeOutOfRange} if deg(a) >= deg(lcm).
Encoding encode(const Polynomial& a, const ModuliPairAnalysis& moduli);

/// a1 == a2 (mod gcd(m1, m2)).
bool check_consistency(const ResiduePair& r, const ModuliPairAnalysis& moduli);

/// k2 = ((a1 - a2) / m) * gamma2^{-1} mod gamma1, the folding polynomial of
/// the unique a with deg(a) < deg(lcm) whose residue difference is `diff`.
/// Throws Error{kInexactDivision} if m does not divide diff.
Polynomial folding_from_difference(const Polynomial& diff,
                                   const ModuliPairAnalysis& moduli);

/// Exact reconstruction of the unique a with deg(a) < deg(lcm) and the given
/// residues, as a = k2 * m2 + a2.
///
/// Throws Error{kInconsistentResidues} when a1 != a2 (mod m) and
/// Error{kDegreeOutOfRange} when a residue is not reduced.
Polynomial crt_pair(const ResiduePair& r, const ModuliPairAnalysis& moduli);

}  // namespace polycrt
