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

#include "polycrt/crt.hpp"

#include <string>

namespace polycrt {

namespace {

void require_reduced(const Polynomial& r, const Polynomial& modulus,
                     const char* name) {
  if (r.degree() >= modulus.degree()) {
    throw Error(ErrorCode::kDegreeOutOfRange,
                std::string(name) + " = " + poly_format(r) +
                    " is not reduced modulo " + poly_format(modulus));
  }
}

}  // namespace

Encoding encode(const Polynomial& a, const ModuliPairAnalysis& moduli) {
  if (a.degree() >= moduli.lcm().degree()) {
    throw Error(ErrorCode::kDegreeOutOfRange,
                "deg(a) must be below deg(lcm) = " +
                    std::to_string(moduli.deg_lcm()));
  }
  auto [k1, a1] = poly_divmod(a, moduli.m1());
  auto [k2, a2] = poly_divmod(a, moduli.m2());
  return {{std::move(a1), std::move(a2)}, {std::move(k1), std::move(k2)}};
}

bool check_consistency(const ResiduePair& r, const ModuliPairAnalysis& moduli) {
  return poly_mod(r.a1 - r.a2, moduli.gcd()).is_zero();
}

Polynomial folding_from_difference(const Polynomial& diff,
                                   const ModuliPairAnalysis& moduli) {
  // k2*gamma2 - k1*gamma1 = diff / m, reduced mod gamma1.
  const Polynomial quotient = poly_exact_div(diff, moduli.gcd());
  return poly_mod(quotient * moduli.gamma2_inv(), moduli.gamma1());
}

Polynomial crt_pair(const ResiduePair& r, const ModuliPairAnalysis& moduli) {
  require_reduced(r.a1, moduli.m1(), "a1");
  require_reduced(r.a2, moduli.m2(), "a2");
  if (!check_consistency(r, moduli)) {
    throw Error(ErrorCode::kInconsistentResidues,
                "residues " + poly_format(r.a1) + " and " + poly_format(r.a2) +
                    " differ modulo gcd " + poly_format(moduli.gcd()));
  }
  const Polynomial k2 = folding_from_difference(r.a1 - r.a2, moduli);
  return k2 * moduli.m2() + r.a2;
}

}  // namespace polycrt
