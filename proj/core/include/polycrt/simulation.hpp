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

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "polycrt/level_analysis.hpp"
#include "polycrt/polynomial.hpp"
#include "polycrt/robust_decoder.hpp"

namespace polycrt {

using Rng = std::mt19937_64;

/// Independent generator for stream `stream` of a seeded run. Trial t of a
/// campaign always draws from trial_rng(seed, t), so results do not depend
/// on how trials are scheduled.
Rng trial_rng(std::uint64_t seed, std::uint64_t stream);

/// Uniform over all polynomials of degree < max_deg_exclusive (zero included).
Polynomial sample_polynomial(const Field& field, int max_deg_exclusive, Rng& rng);

/// Uniform over all polynomials of degree <= tau; tau = -1 yields zero.
Polynomial sample_error(const Field& field, int tau, Rng& rng);

/// Uniform monic polynomial of exactly the given degree.
Polynomial sample_monic(const Field& field, int degree, Rng& rng);

struct ModuliGenerationParams {
  int min_gcd_degree = 1;
  int max_gcd_degree = 3;
  int min_cofactor_degree = 1;
  int max_cofactor_degree = 6;
  /// Multiply each modulus by a random nonzero scalar (no-op over F_2).
  bool scale_moduli = true;
  int max_attempts = 10'000;
};

/// Draws m, gamma1, gamma2 (monic, gamma's nonconstant and coprime) and
/// returns the analysis of (m*gamma1, m*gamma2). Throws Error{kInvalidConfig}
/// if no coprime cofactor pair is found within max_attempts.
ModuliPairAnalysis random_moduli_pair(const Field& field,
                                      const ModuliGenerationParams& params, Rng& rng);

struct TrialConfig {
  int level = 1;
  /// Error degree bound; -1 means error-free residues.
  int tau = -1;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  /// Allows tau at or beyond the level's error bound; failures are then
  /// informational.
  bool boundary = false;
  unsigned threads = 1;
};

struct TrialRecord {
  std::uint64_t index = 0;
  Polynomial a, e1, e2;
  Polynomial r1, r2;  // received residues, for replay
  std::optional<Branch> branch{};  // empty when the decoder raised
  bool k2_match = false;
  bool residual_is_e2 = false;   // a_hat - a == e2
  Degree error_degree{};         // deg(a_hat - a)
  bool success = false;          // k2_match && deg(a_hat - a) <= tau
  std::string error{};           // decoder diagnostic, if any
};

struct TrialReport {
  TrialConfig config;
  int error_bound_exclusive = 0;
  int dynamic_range_exclusive = 0;
  std::vector<TrialRecord> trials;
  std::uint64_t successes = 0;
  std::uint64_t failures = 0;
  std::uint64_t decoder_errors = 0;
  Degree max_error_degree;
  /// Indexed by static_cast<size_t>(Branch).
  std::array<std::uint64_t, 3> branch_counts{};
};

/// Monte-Carlo robustness campaign at one level.
///
/// Each trial draws a with deg(a) < deg(M) - deg(sigma_level), errors of
/// degree <= tau, decodes, and compares with the encoding of a. Decoder
/// exceptions are recorded as failures. Throws Error{kInvalidConfig} for
/// tau < -1 or, outside boundary mode, tau beyond the level's bound, and
/// Error{kLevelOutOfRange} for a bad level.
TrialReport run_campaign(const ModuliPairAnalysis& analysis, const TrialConfig& config);

/// Evaluates one instance (a, e1, e2) at a level; the building block of
/// run_campaign, exposed for replay.
TrialRecord evaluate_trial(const ModuliPairAnalysis& analysis, int level, int tau,
                           const Polynomial& a, const Polynomial& e1,
                           const Polynomial& e2);

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 22;

/// Instance violating deg(m) + deg(sigma_i) <= deg(a1 - a2) < deg(m1).
struct ResidueGapViolation {
  Polynomial a, a1, a2;
};

/// Enumerates every a with deg(a) < deg(M) - deg(sigma_level); for those
/// with deg(a2) < deg(m1) and a1 != a2 checks the residue-difference degree
/// window above. Throws Error{kEnumerationTooLarge} when p^(range) > cap.
std::vector<ResidueGapViolation> enumerate_residue_gap_violations(
    const ModuliPairAnalysis& analysis, int level,
    std::uint64_t cap = kDefaultEnumerationCap);

struct BranchViolation {
  Polynomial a, e1, e2;
  Branch observed;
  std::string reason;
};

/// For every a in the level's range and every error pair of degree <= tau,
/// checks that classify() on the erroneous difference
///   * implies the matching relation between the clean residues
///     (folded: a1 != a2 and deg(a2) < deg(m1); large: deg(a2) >= deg(m1);
///     equal: a1 == a2), and
///   * agrees with classify() on the clean difference a1 - a2.
/// Throws Error{kEnumerationTooLarge} when the instance count exceeds cap.
std::vector<BranchViolation> enumerate_branch_violations(
    const ModuliPairAnalysis& analysis, int level, int tau,
    std::uint64_t cap = kDefaultEnumerationCap);

struct BoundaryCounterexample {
  int tau = 0;
  TrialRecord record;
};

/// Randomized search with tau = deg(m) + deg(sigma_level), one past the
/// guaranteed bound, for an instance whose decode misses k2 or exceeds tau.
/// Returns the first hit, if any, within `budget` trials.
std::optional<BoundaryCounterexample> search_boundary_counterexample(
    const ModuliPairAnalysis& analysis, int level, std::uint64_t budget,
    std::uint64_t seed);

}  // namespace polycrt
