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

#include <optional>
#include <string_view>
#include <vector>

#include "polycrt/level_analysis.hpp"
#include "polycrt/polynomial.hpp"

namespace polycrt {

/// Which relation between the clean residues the erroneous difference
/// q21 = r1 - r2 reveals at a given level.
enum class Branch {
  /// deg(m1) > deg(q21) >= deg(m) + deg(sigma_i): a1 != a2, deg(a2) < deg(m1).
  kFoldedDifference,
  /// deg(q21) >= deg(m1): deg(a2) >= deg(m1).
  kLargeResidue,
  /// deg(q21) < deg(m) + deg(sigma_i): a1 == a2.
  kEqualResidues,
};

/// Wire names: "Case1_FoldedDifference", "Case2_LargeResidue",
/// "Case3_EqualResidues".
std::string_view branch_name(Branch b) noexcept;
std::optional<Branch> branch_from_name(std::string_view name) noexcept;

/// Received residues r_i = a_i + e_i.
struct ErroneousResiduePair {
  Polynomial r1;
  Polynomial r2;
};

struct ReconstructionResult {
  Polynomial a_hat;          // k2_hat * m2 + r2
  Polynomial k2_hat;
  Branch branch;
  Polynomial q21;            // r1 - r2
  Polynomial cascade_tail;   // last cascade remainder; zero for kEqualResidues
};

/// Reduces v successively modulo m*sigma_1, m*sigma_2, ..., m*sigma_level and
/// returns every intermediate remainder (size == level).
/// Throws Error{kLevelOutOfRange} unless 1 <= level <= K+1.
std::vector<Polynomial> remainder_cascade_trace(const Polynomial& v,
                                                const ModuliPairAnalysis& analysis,
                                                int level);

/// Last entry of remainder_cascade_trace.
Polynomial remainder_cascade(const Polynomial& v, const ModuliPairAnalysis& analysis,
                             int level);

Branch classify(const Polynomial& q21, const ModuliPairAnalysis& analysis, int level);

/// Closed-form robust reconstruction at level i.
///
/// If the true a satisfies deg(a) < deg(M) - deg(sigma_i) and both residue
/// errors have degree at most tau < deg(m) + deg(sigma_i), then k2_hat equals
/// the true folding polynomial k2 and a_hat - a = e2.
///
/// Outside those hypotheses the result carries no guarantee. A violation is
/// reported as Error{kInexactDivision} when m fails to divide q21 - tail;
/// otherwise a (possibly wrong) estimate is returned without a flag.
/// Throws Error{kLevelOutOfRange} for a bad level and Error{kDegreeOutOfRange}
/// for unreduced residues.
ReconstructionResult reconstruct(const ErroneousResiduePair& r,
                                 const ModuliPairAnalysis& analysis, int level);

/// reconstruct() at the top level K+1: full dynamic range deg(M), error
/// bound tau < deg(m).
ReconstructionResult reconstruct_full_range(const ErroneousResiduePair& r,
                                            const ModuliPairAnalysis& analysis);

}  // namespace polycrt
