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

#include "polycrt/level_analysis.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <string>
#include <utility>

namespace polycrt {

namespace {

int deg(const Polynomial& p) { return static_cast<int>(p.degree().value()); }

}  // namespace

ModuliPairAnalysis::ModuliPairAnalysis(Polynomial m1, Polynomial m2, bool swapped)
    : m1_(std::move(m1)),
      m2_(std::move(m2)),
      gcd_(m1_.field()),
      gamma1_(m1_.field()),
      gamma2_(m1_.field()),
      lcm_(m1_.field()),
      gamma2_inv_(m1_.field()),
      swapped_(swapped) {
  gcd_ = poly_gcd(m1_, m2_);
  if (gcd_.degree() < Degree(1)) {
    throw Error(ErrorCode::kCoprimeModuli,
                "moduli " + poly_format(m1_) + " and " + poly_format(m2_) +
                    " are coprime; robust reconstruction needs a common factor");
  }
  gamma1_ = poly_exact_div(m1_, gcd_);
  gamma2_ = poly_exact_div(m2_, gcd_);
  if (gamma1_.is_constant()) {
    throw Error(ErrorCode::kDegenerateModuli,
                poly_format(m1_) + " divides " + poly_format(m2_) +
                    "; the pair has no robust level");
  }
  lcm_ = poly_lcm(m1_, m2_);
  gamma2_inv_ = poly_inverse_mod(gamma2_, gamma1_);

  sigma_.push_back(gamma2_);
  sigma_.push_back(gamma1_);
  while (!sigma_.back().is_constant()) {
    sigma_.push_back(poly_mod(sigma_[sigma_.size() - 2], sigma_.back()));
  }
  // gamma1, gamma2 coprime, so the chain ends at a nonzero scalar.
  assert(!sigma_.back().is_zero());

  const int k = static_cast<int>(sigma_.size()) - 3;
  for (int i = 1; i <= k + 1; ++i) {
    const Polynomial& s = sigma_[static_cast<std::size_t>(i + 1)];
    cascade_moduli_.push_back(gcd_ * s);
    const int ds = deg(s);
    levels_.push_back(LevelSpec{
        .level = i,
        .sigma_degree = ds,
        .error_bound_exclusive = deg(gcd_) + ds,
        .dynamic_range_exclusive = deg(lcm_) - ds,
    });
  }
}

const Polynomial& ModuliPairAnalysis::sigma(int i) const {
  if (i < -1 || i > k() + 1) {
    throw Error(ErrorCode::kLevelOutOfRange,
                "sigma index " + std::to_string(i) + " outside [-1, " +
                    std::to_string(k() + 1) + "]");
  }
  return sigma_[static_cast<std::size_t>(i + 1)];
}

const Polynomial& ModuliPairAnalysis::cascade_modulus(int i) const {
  if (i < 1 || i > max_level()) {
    throw Error(ErrorCode::kLevelOutOfRange,
                "level " + std::to_string(i) + " outside [1, " +
                    std::to_string(max_level()) + "]");
  }
  return cascade_moduli_[static_cast<std::size_t>(i - 1)];
}

const LevelSpec& ModuliPairAnalysis::level(int i) const {
  if (i < 1 || i > max_level()) {
    throw Error(ErrorCode::kLevelOutOfRange,
                "level " + std::to_string(i) + " outside [1, " +
                    std::to_string(max_level()) + "]");
  }
  return levels_[static_cast<std::size_t>(i - 1)];
}

ModuliPairAnalysis analyze_pair(const Polynomial& m1, const Polynomial& m2) {
  if (m1.field() != m2.field()) {
    throw Error(ErrorCode::kMixedFields, "moduli over different fields");
  }
  if (m1.is_zero() || m2.is_zero()) {
    throw Error(ErrorCode::kZeroModulus, "modulus is the zero polynomial");
  }
  // Equal degrees keep the input order.
  if (m1.degree() > m2.degree()) return ModuliPairAnalysis(m2, m1, true);
  return ModuliPairAnalysis(m1, m2, false);
}

std::vector<LevelSpec> level_table(const ModuliPairAnalysis& analysis) {
  auto rows = analysis.levels();
  return {rows.begin(), rows.end()};
}

int multi_moduli_error_bound(std::span<const Polynomial> moduli) {
  if (moduli.size() < 2) {
    throw Error(ErrorCode::kTooFewModuli,
                "need at least two moduli, got " + std::to_string(moduli.size()));
  }
  for (const auto& m : moduli) {
    if (m.is_zero()) throw Error(ErrorCode::kZeroModulus, "modulus is the zero polynomial");
  }
  const std::size_t n = moduli.size();
  std::vector<int> gcd_deg(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int d = deg(poly_gcd(moduli[i], moduli[j]));
      gcd_deg[i * n + j] = gcd_deg[j * n + i] = d;
    }
  }
  int best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int row_min = std::numeric_limits<int>::max();
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) row_min = std::min(row_min, gcd_deg[i * n + j]);
    }
    best = std::max(best, row_min);
  }
  return best;
}

}  // namespace polycrt
