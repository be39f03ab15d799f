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

#include <cstdint>
#include <span>
#include <vector>

#include "polycrt/polynomial.hpp"

namespace polycrt {

/// One row of the level trade-off table for a moduli pair.
///
/// At level i a polynomial a with deg(a) < dynamic_range_exclusive is
/// recoverable (up to its low tau coefficients) from residues whose errors
/// have degree tau < error_bound_exclusive.
struct LevelSpec {
  int level = 0;                    // i in [1, K+1]
  int sigma_degree = 0;             // deg(sigma_i)
  int error_bound_exclusive = 0;    // deg(m) + deg(sigma_i)
  int dynamic_range_exclusive = 0;  // deg(M) - deg(sigma_i)

  friend bool operator==(const LevelSpec&, const LevelSpec&) = default;
};

/// Derived structure of a non-coprime moduli pair (m1, m2), normalized so
/// that deg(m1) <= deg(m2).
///
///   m       = gcd(m1, m2) (monic),  m1 = m * gamma1,  m2 = m * gamma2
///   M       = lcm(m1, m2)
///   sigma   = Euclidean remainder chain started at (gamma2, gamma1):
///             sigma_{-1} = gamma2, sigma_0 = gamma1,
///             sigma_i = sigma_{i-2} mod sigma_{i-1}, ending at the first
///             constant (nonzero) entry sigma_{K+1}
///   gamma2_inv = gamma2^{-1} mod gamma1
///
/// Immutable once built; construct through analyze_pair().
class ModuliPairAnalysis {
 public:
  const Field& field() const noexcept { return m1_.field(); }

  const Polynomial& m1() const noexcept { return m1_; }
  const Polynomial& m2() const noexcept { return m2_; }
  const Polynomial& gcd() const noexcept { return gcd_; }
  const Polynomial& gamma1() const noexcept { return gamma1_; }
  const Polynomial& gamma2() const noexcept { return gamma2_; }
  const Polynomial& lcm() const noexcept { return lcm_; }
  const Polynomial& gamma2_inv() const noexcept { return gamma2_inv_; }

  /// True when the caller's (m1, m2) were exchanged to get deg(m1) <= deg(m2).
  bool swapped() const noexcept { return swapped_; }

  /// K, the index with deg(sigma_{K+1}) = 0.
  int k() const noexcept { return static_cast<int>(sigma_.size()) - 3; }
  int max_level() const noexcept { return k() + 1; }

  /// sigma_i for i in [-1, K+1].
  const Polynomial& sigma(int i) const;
  /// Whole chain sigma_{-1}, sigma_0, ..., sigma_{K+1}.
  std::span<const Polynomial> sigma_chain() const noexcept { return sigma_; }

  /// m * sigma_i for i in [1, K+1]; the moduli of the remainder cascade.
  const Polynomial& cascade_modulus(int i) const;

  int deg_m() const noexcept { return static_cast<int>(gcd_.degree().value()); }
  int deg_m1() const noexcept { return static_cast<int>(m1_.degree().value()); }
  int deg_m2() const noexcept { return static_cast<int>(m2_.degree().value()); }
  int deg_lcm() const noexcept { return static_cast<int>(lcm_.degree().value()); }

  /// Row for level i in [1, K+1]; throws Error{kLevelOutOfRange}.
  const LevelSpec& level(int i) const;
  std::span<const LevelSpec> levels() const noexcept { return levels_; }

 private:
  friend ModuliPairAnalysis analyze_pair(const Polynomial& m1, const Polynomial& m2);

  ModuliPairAnalysis(Polynomial m1, Polynomial m2, bool swapped);

  Polynomial m1_, m2_;
  Polynomial gcd_, gamma1_, gamma2_, lcm_, gamma2_inv_;
  std::vector<Polynomial> sigma_;          // sigma_{-1} .. sigma_{K+1}
  std::vector<Polynomial> cascade_moduli_; // m * sigma_1 .. m * sigma_{K+1}
  std::vector<LevelSpec> levels_;
  bool swapped_ = false;
};

/// Analyzes a moduli pair.
///
/// Throws Error{kZeroModulus} for a zero modulus, Error{kCoprimeModuli} when
/// deg(gcd) = 0, and Error{kDegenerateModuli} when one modulus divides the
/// other up to a scalar (gamma1 constant, so no level exists).
ModuliPairAnalysis analyze_pair(const Polynomial& m1, const Polynomial& m2);

/// The level table, one row per i in 1..K+1 in order of increasing dynamic
/// range (decreasing error bound).
std::vector<LevelSpec> level_table(const ModuliPairAnalysis& analysis);

/// Exclusive residue error bound max_i min_{j != i} deg(gcd(m_i, m_j)) for an
/// L-moduli set (L >= 2). Throws Error{kTooFewModuli} or Error{kZeroModulus}.
int multi_moduli_error_bound(std::span<const Polynomial> moduli);

}  // namespace polycrt
