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

#include "polycrt/simulation.hpp"

#include <gtest/gtest.h>

#include <map>

#include "polycrt/crt.hpp"
#include "test_support.hpp"

namespace polycrt {
namespace {

using testing::P2;
using testing::kF2;

TEST(SamplingTest, EmptyRangeIsZero) {
  Rng rng = trial_rng(1, 0);
  for (int i = 0; i < 10; ++i) {
    EXPECT_TRUE(sample_polynomial(kF2, 0, rng).is_zero());
    EXPECT_TRUE(sample_error(Field(13), -1, rng).is_zero());
  }
}

TEST(SamplingTest, UniformOverEightPolynomials) {
  Rng rng = trial_rng(2, 0);
  std::map<std::string, int> counts;
  constexpr int kDraws = 8000;
  for (int i = 0; i < kDraws; ++i) counts[poly_format(sample_polynomial(kF2, 3, rng))]++;
  ASSERT_EQ(counts.size(), 8u);
  double chi2 = 0;
  for (const auto& [poly, n] : counts) {
    const double d = n - kDraws / 8.0;
    chi2 += d * d / (kDraws / 8.0);
  }
  // 7 degrees of freedom, alpha = 0.001.
  EXPECT_LT(chi2, 24.32);
}

TEST(SamplingTest, ErrorDegreeBound) {
  Rng rng = trial_rng(3, 0);
  bool saw_full = false;
  for (int i = 0; i < 500; ++i) {
    const Polynomial e = sample_error(kF2, 2, rng);
    ASSERT_LE(e.degree(), Degree(2));
    saw_full |= e == P2("x^2+x+1");
  }
  EXPECT_TRUE(saw_full);
  Field f13(13);
  for (int tau = -1; tau < 6; ++tau) {
    for (int i = 0; i < 50; ++i) ASSERT_LE(sample_error(f13, tau, rng).degree(), Degree(tau));
  }
}

TEST(SamplingTest, SeededStreamsAreReproducible) {
  Rng a = trial_rng(77, 5);
  Rng b = trial_rng(77, 5);
  Rng c = trial_rng(77, 6);
  const Field f(13);
  const Polynomial pa = sample_polynomial(f, 20, a);
  EXPECT_EQ(pa, sample_polynomial(f, 20, b));
  EXPECT_NE(pa, sample_polynomial(f, 20, c));
}

TEST(SamplingTest, MonicHasExactDegree) {
  Rng rng = trial_rng(4, 0);
  for (int d = 0; d < 8; ++d) {
    const Polynomial m = sample_monic(Field(13), d, rng);
    EXPECT_EQ(m.degree(), Degree(d));
    EXPECT_TRUE(m.is_monic());
  }
}

TEST(CampaignTest, WorkedExampleLevelThree) {
  const auto an = testing::example_pair();
  const TrialReport r = run_campaign(an, {.level = 3, .tau = 2, .trials = 1000, .seed = 9});
  EXPECT_EQ(r.successes, 1000u);
  EXPECT_EQ(r.failures, 0u);
  EXPECT_EQ(r.decoder_errors, 0u);
  EXPECT_LE(r.max_error_degree, Degree(2));
  std::uint64_t total = 0;
  for (auto n : r.branch_counts) total += n;
  EXPECT_EQ(total, 1000u);
  for (const auto& t : r.trials) ASSERT_TRUE(t.residual_is_e2);
}

TEST(CampaignTest, EmptyCampaign) {
  const TrialReport r = run_campaign(testing::example_pair(), {.level = 1, .tau = 0});
  EXPECT_TRUE(r.trials.empty());
  EXPECT_EQ(r.successes, 0u);
  EXPECT_EQ(r.failures, 0u);
  EXPECT_FALSE(r.max_error_degree.is_finite());
}

TEST(CampaignTest, ConfigValidation) {
  const auto an = testing::example_pair();
  try {
    run_campaign(an, {.level = 3, .tau = 3, .trials = 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidConfig);
  }
  EXPECT_THROW(run_campaign(an, {.level = 1, .tau = -2, .trials = 1}), Error);
  try {
    run_campaign(an, {.level = 9, .tau = 0, .trials = 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLevelOutOfRange);
  }
  EXPECT_NO_THROW(run_campaign(an, {.level = 3, .tau = 3, .trials = 5, .boundary = true}));
}

TEST(CampaignTest, ParallelRunMatchesSequential) {
  const auto an = testing::example_pair();
  TrialConfig cfg{.level = 4, .tau = 2, .trials = 400, .seed = 1234, .boundary = true};
  const TrialReport seq = run_campaign(an, cfg);
  cfg.threads = 4;
  const TrialReport par = run_campaign(an, cfg);
  ASSERT_EQ(seq.trials.size(), par.trials.size());
  for (std::size_t i = 0; i < seq.trials.size(); ++i) {
    ASSERT_EQ(seq.trials[i].a, par.trials[i].a);
    ASSERT_EQ(seq.trials[i].e1, par.trials[i].e1);
    ASSERT_EQ(seq.trials[i].e2, par.trials[i].e2);
    ASSERT_EQ(seq.trials[i].success, par.trials[i].success);
  }
  EXPECT_EQ(seq.successes, par.successes);
  EXPECT_EQ(seq.branch_counts, par.branch_counts);
  EXPECT_EQ(seq.max_error_degree, par.max_error_degree);
}

TEST(CampaignTest, GuaranteeModeOnRandomPairs) {
  for (std::uint64_t p : {2u, 13u}) {
    Field f(p);
    Rng rng = trial_rng(55, p);
    for (int n = 0; n < 8; ++n) {
      const auto an = random_moduli_pair(f, {}, rng);
      for (const auto& spec : an.levels()) {
        const TrialReport r = run_campaign(
            an, {.level = spec.level, .tau = spec.error_bound_exclusive - 1, .trials = 50,
                 .seed = static_cast<std::uint64_t>(n)});
        ASSERT_EQ(r.failures, 0u);
      }
    }
  }
}

TEST(EnumerationTest, ResidueGapHoldsOnSmallPairs) {
  const auto micro = analyze_pair(P2("x^2") * P2("x+1"), P2("x^2") * P2("x^2+x+1"));
  EXPECT_TRUE(enumerate_residue_gap_violations(micro, 1).empty());
  const auto an = testing::example_pair();
  EXPECT_TRUE(enumerate_residue_gap_violations(an, 1).empty());
}

TEST(EnumerationTest, CapIsEnforced) {
  const auto an = testing::example_pair();
  try {
    enumerate_residue_gap_violations(an, 4, 1 << 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEnumerationTooLarge);
  }
  EXPECT_THROW(enumerate_branch_violations(an, 4, 1, 1 << 10), Error);
}

TEST(EnumerationTest, BranchTrichotomyOnSmallPairs) {
  const auto micro = analyze_pair(P2("x^2") * P2("x+1"), P2("x^2") * P2("x^2+x+1"));
  EXPECT_TRUE(enumerate_branch_violations(micro, 1, 1).empty());

  const auto mid = analyze_pair(P2("x^2+x+1") * P2("x^3+x+1"), P2("x^2+x+1") * P2("x^5+x^2+1"));
  for (const auto& spec : mid.levels()) {
    const int tau = std::min(spec.error_bound_exclusive - 1, 2);
    const auto v = enumerate_branch_violations(mid, spec.level, tau);
    EXPECT_TRUE(v.empty()) << "level " << spec.level << ": " << v.front().reason;
  }
  EXPECT_TRUE(enumerate_branch_violations(testing::example_pair(), 1, 1).empty());
}

TEST(EnumerationTest, BranchCheckDetectsOutOfBoundErrors) {
  // With tau at the level's bound, errors can fake a folded difference.
  const auto micro = analyze_pair(P2("x^2") * P2("x+1"), P2("x^2") * P2("x^2+x+1"));
  EXPECT_FALSE(enumerate_branch_violations(micro, 1, 2).empty());
}

TEST(BoundarySearchTest, FoundInstancesReplay) {
  const auto an = testing::example_pair();
  const auto hit = search_boundary_counterexample(an, 4, 100'000, 17);
  if (!hit) GTEST_SKIP() << "no counterexample within budget";
  EXPECT_EQ(hit->tau, 2);
  const TrialRecord replay =
      evaluate_trial(an, 4, hit->tau, hit->record.a, hit->record.e1, hit->record.e2);
  EXPECT_FALSE(replay.success);
  EXPECT_EQ(replay.k2_match, hit->record.k2_match);
  EXPECT_EQ(replay.error_degree, hit->record.error_degree);
  const auto again = search_boundary_counterexample(an, 4, 100'000, 17);
  ASSERT_TRUE(again.has_value());
  EXPECT_EQ(again->record.index, hit->record.index);
}

TEST(BoundarySearchTest, ZeroBudgetFindsNothing) {
  EXPECT_FALSE(search_boundary_counterexample(testing::example_pair(), 4, 0, 1).has_value());
}

}  // namespace
}  // namespace polycrt
