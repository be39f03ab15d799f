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

#include "polycrt/robust_decoder.hpp"

#include <string>

#include "polycrt/crt.hpp"

namespace polycrt {

std::string_view branch_name(Branch b) noexcept {
  switch (b) {
    case Branch::kFoldedDifference: return "Case1_FoldedDifference";
    case Branch::kLargeResidue: return "Case2_LargeResidue";
    case Branch::kEqualResidues: return "Case3_EqualResidues";
  }
  return "Unknown";
}

std::optional<Branch> branch_from_name(std::string_view name) noexcept {
  for (Branch b : {Branch::kFoldedDifference, Branch::kLargeResidue,
                   Branch::kEqualResidues}) {
    if (branch_name(b) == name) return b;
  }
  return std::nullopt;
}

namespace {

void require_level(const ModuliPairAnalysis& analysis, int level) {
  if (level < 1 || level > analysis.max_level()) {
    throw Error(ErrorCode::kLevelOutOfRange,
                "level " + std::to_string(level) + " outside [1, " +
                    std::to_string(analysis.max_level()) + "]");
  }
}

}  // namespace

std::vector<Polynomial> remainder_cascade_trace(const Polynomial& v,
                                                const ModuliPairAnalysis& analysis,
                                                int level) {
  require_level(analysis, level);
  std::vector<Polynomial> trace;
  trace.reserve(static_cast<std::size_t>(level));
  Polynomial cur = v;
  for (int j = 1; j <= level; ++j) {
    cur = poly_mod(cur, analysis.cascade_modulus(j));
    trace.push_back(cur);
  }
  return trace;
}

Polynomial remainder_cascade(const Polynomial& v, const ModuliPairAnalysis& analysis,
                             int level) {
  return remainder_cascade_trace(v, analysis, level).back();
}

Branch classify(const Polynomial& q21, const ModuliPairAnalysis& analysis, int level) {
  const LevelSpec& spec = analysis.level(level);
  const Degree d = q21.degree();
  if (d >= Degree(analysis.deg_m1())) return Branch::kLargeResidue;
  if (d >= Degree(spec.error_bound_exclusive)) return Branch::kFoldedDifference;
  return Branch::kEqualResidues;
}

ReconstructionResult reconstruct(const ErroneousResiduePair& r,
                                 const ModuliPairAnalysis& analysis, int level) {
  require_level(analysis, level);
  if (r.r1.degree() >= analysis.m1().degree() ||
      r.r2.degree() >= analysis.m2().degree()) {
    throw Error(ErrorCode::kDegreeOutOfRange,
                "received residues must be reduced modulo m1 and m2");
  }
  const Field& f = analysis.field();
  Polynomial q21 = r.r1 - r.r2;
  const Branch branch = classify(q21, analysis, level);

  Polynomial k2_hat(f);
  Polynomial tail(f);
  switch (branch) {
    case Branch::kFoldedDifference:
      tail = remainder_cascade(q21, analysis, level);
      break;
    case Branch::kLargeResidue:
      tail = remainder_cascade(poly_mod(q21, analysis.m1()), analysis, level);
      break;
    case Branch::kEqualResidues:
      break;
  }
  if (branch != Branch::kEqualResidues) {
    // q21 - tail recovers a1 - a2 when the error bound holds.
    k2_hat = folding_from_difference(q21 - tail, analysis);
  }
  Polynomial a_hat = k2_hat * analysis.m2() + r.r2;
  return {std::move(a_hat), std::move(k2_hat), branch, std::move(q21),
          std::move(tail)};
}

ReconstructionResult reconstruct_full_range(const ErroneousResiduePair& r,
                                            const ModuliPairAnalysis& analysis) {
  return reconstruct(r, analysis, analysis.max_level());
}

}  // namespace polycrt
