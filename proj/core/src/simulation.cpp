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

#include <algorithm>
#include <thread>
#include <utility>

#include "polycrt/crt.hpp"

namespace polycrt {

Rng trial_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

Polynomial sample_polynomial(const Field& field, int max_deg_exclusive, Rng& rng) {
  if (max_deg_exclusive <= 0) return Polynomial(field);
  std::uniform_int_distribution<Field::value_type> coeff(0, field.characteristic() - 1);
  std::vector<Field::value_type> c(static_cast<std::size_t>(max_deg_exclusive));
  for (auto& v : c) v = coeff(rng);
  return Polynomial::from_raw(field, std::move(c));
}

Polynomial sample_error(const Field& field, int tau, Rng& rng) {
  return sample_polynomial(field, tau + 1, rng);
}

Polynomial sample_monic(const Field& field, int degree, Rng& rng) {
  return sample_polynomial(field, degree, rng) +
         Polynomial::monomial(field, 1, static_cast<std::size_t>(degree));
}

ModuliPairAnalysis random_moduli_pair(const Field& field,
                                      const ModuliGenerationParams& params, Rng& rng) {
  if (params.min_gcd_degree < 1 || params.max_gcd_degree < params.min_gcd_degree ||
      params.min_cofactor_degree < 1 ||
      params.max_cofactor_degree < params.min_cofactor_degree) {
    throw Error(ErrorCode::kInvalidConfig, "invalid moduli generation degree ranges");
  }
  std::uniform_int_distribution<int> gcd_deg(params.min_gcd_degree, params.max_gcd_degree);
  std::uniform_int_distribution<int> cof_deg(params.min_cofactor_degree,
                                             params.max_cofactor_degree);
  std::uniform_int_distribution<Field::value_type> scalar(1, field.characteristic() - 1);

  const Polynomial m = sample_monic(field, gcd_deg(rng), rng);
  for (int attempt = 0; attempt < params.max_attempts; ++attempt) {
    int d1 = cof_deg(rng);
    int d2 = cof_deg(rng);
    if (d1 > d2) std::swap(d1, d2);
    Polynomial g1 = sample_monic(field, d1, rng);
    Polynomial g2 = sample_monic(field, d2, rng);
    if (poly_gcd(g1, g2).degree() != Degree(0)) continue;
    Polynomial m1 = m * g1;
    Polynomial m2 = m * g2;
    if (params.scale_moduli) {
      m1 = FieldElement(field, scalar(rng)) * m1;
      m2 = FieldElement(field, scalar(rng)) * m2;
    }
    return analyze_pair(m1, m2);
  }
  throw Error(ErrorCode::kInvalidConfig, "no coprime cofactor pair found");
}

TrialRecord evaluate_trial(const ModuliPairAnalysis& analysis, int level, int tau,
                           const Polynomial& a, const Polynomial& e1,
                           const Polynomial& e2) {
  const Field& f = analysis.field();
  const Encoding enc = encode(a, analysis);
  TrialRecord rec{
      .a = a,
      .e1 = e1,
      .e2 = e2,
      .r1 = poly_mod(enc.residues.a1 + e1, analysis.m1()),
      .r2 = poly_mod(enc.residues.a2 + e2, analysis.m2()),
  };
  try {
    ReconstructionResult res = reconstruct({rec.r1, rec.r2}, analysis, level);
    const Polynomial residual = res.a_hat - a;
    rec.branch = res.branch;
    rec.k2_match = res.k2_hat == enc.folding.k2;
    rec.residual_is_e2 = residual == e2;
    rec.error_degree = residual.degree();
    rec.success = rec.k2_match && rec.error_degree <= Degree(tau);
  } catch (const Error& err) {
    rec.error = std::string(error_code_name(err.code())) + ": " + err.what();
    rec.error_degree = Polynomial(f).degree();
  }
  return rec;
}

TrialReport run_campaign(const ModuliPairAnalysis& analysis, const TrialConfig& config) {
  const LevelSpec& spec = analysis.level(config.level);
  if (config.tau < -1) {
    throw Error(ErrorCode::kInvalidConfig, "tau must be >= -1");
  }
  if (!config.boundary && config.tau >= spec.error_bound_exclusive) {
    throw Error(ErrorCode::kInvalidConfig,
                "tau = " + std::to_string(config.tau) + " is not below the level " +
                    std::to_string(config.level) + " error bound " +
                    std::to_string(spec.error_bound_exclusive) +
                    " (use boundary mode to probe beyond it)");
  }
  if (config.tau >= analysis.deg_m1()) {
    throw Error(ErrorCode::kInvalidConfig, "tau must stay below deg(m1)");
  }

  TrialReport report;
  report.config = config;
  report.error_bound_exclusive = spec.error_bound_exclusive;
  report.dynamic_range_exclusive = spec.dynamic_range_exclusive;
  std::vector<std::optional<TrialRecord>> slots(config.trials);

  const Field& f = analysis.field();
  auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t t = begin; t < end; ++t) {
      Rng rng = trial_rng(config.seed, t);
      Polynomial a = sample_polynomial(f, spec.dynamic_range_exclusive, rng);
      Polynomial e1 = sample_error(f, config.tau, rng);
      Polynomial e2 = sample_error(f, config.tau, rng);
      TrialRecord rec = evaluate_trial(analysis, config.level, config.tau, a, e1, e2);
      rec.index = t;
      slots[t] = std::move(rec);
    }
  };

  const unsigned threads = std::max(1u, config.threads);
  if (threads == 1 || config.trials < 2 * threads) {
    run_range(0, config.trials);
  } else {
    std::vector<std::jthread> workers;
    const std::uint64_t chunk = (config.trials + threads - 1) / threads;
    for (std::uint64_t begin = 0; begin < config.trials; begin += chunk) {
      workers.emplace_back(run_range, begin, std::min(config.trials, begin + chunk));
    }
  }

  report.trials.reserve(slots.size());
  for (auto& slot : slots) report.trials.push_back(std::move(*slot));
  for (const auto& rec : report.trials) {
    if (rec.success) {
      ++report.successes;
    } else {
      ++report.failures;
    }
    if (rec.branch) {
      ++report.branch_counts[static_cast<std::size_t>(*rec.branch)];
      report.max_error_degree = std::max(report.max_error_degree, rec.error_degree);
    } else {
      ++report.decoder_errors;
    }
  }
  return report;
}

namespace {

std::uint64_t checked_power(std::uint64_t base, int exponent, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (int i = 0; i < exponent; ++i) {
    if (v > cap / base) {
      throw Error(ErrorCode::kEnumerationTooLarge,
                  std::to_string(base) + "^" + std::to_string(exponent) +
                      " instances exceed the enumeration cap " + std::to_string(cap));
    }
    v *= base;
  }
  return v;
}

// Odometer over all coefficient vectors of a fixed length.
class PolynomialEnumerator {
 public:
  PolynomialEnumerator(const Field& field, int length)
      : field_(field), digits_(static_cast<std::size_t>(std::max(length, 0)), 0) {}

  Polynomial current() const { return Polynomial::from_raw(field_, digits_); }

  bool next() {
    for (auto& d : digits_) {
      if (++d < field_.characteristic()) return true;
      d = 0;
    }
    return false;
  }

 private:
  Field field_;
  std::vector<Field::value_type> digits_;
};

template <typename Fn>
void for_each_polynomial(const Field& field, int length, Fn&& fn) {
  PolynomialEnumerator it(field, length);
  do {
    fn(it.current());
  } while (it.next());
}

}  // namespace

std::vector<ResidueGapViolation> enumerate_residue_gap_violations(
    const ModuliPairAnalysis& analysis, int level, std::uint64_t cap) {
  const LevelSpec& spec = analysis.level(level);
  const Field& f = analysis.field();
  checked_power(f.characteristic(), spec.dynamic_range_exclusive, cap);

  const Degree lower(spec.error_bound_exclusive);
  const Degree upper(analysis.deg_m1());
  std::vector<ResidueGapViolation> out;
  for_each_polynomial(f, spec.dynamic_range_exclusive, [&](const Polynomial& a) {
    const Encoding enc = encode(a, analysis);
    const auto& [a1, a2] = enc.residues;
    if (a2.degree() >= upper || a1 == a2) return;
    const Degree d = (a1 - a2).degree();
    if (d < lower || d >= upper) out.push_back({a, a1, a2});
  });
  return out;
}

std::vector<BranchViolation> enumerate_branch_violations(
    const ModuliPairAnalysis& analysis, int level, int tau, std::uint64_t cap) {
  const LevelSpec& spec = analysis.level(level);
  const Field& f = analysis.field();
  if (tau < -1) throw Error(ErrorCode::kInvalidConfig, "tau must be >= -1");
  const std::uint64_t error_count = checked_power(f.characteristic(), tau + 1, cap);
  const std::uint64_t a_count = checked_power(f.characteristic(), spec.dynamic_range_exclusive, cap);
  if (a_count > cap / (error_count * error_count)) {
    throw Error(ErrorCode::kEnumerationTooLarge, "branch enumeration exceeds cap");
  }

  std::vector<BranchViolation> out;
  const Degree deg_m1(analysis.deg_m1());
  for_each_polynomial(f, spec.dynamic_range_exclusive, [&](const Polynomial& a) {
    const Encoding enc = encode(a, analysis);
    const auto& [a1, a2] = enc.residues;
    const Branch clean = classify(a1 - a2, analysis, level);
    for_each_polynomial(f, tau + 1, [&](const Polynomial& e1) {
      for_each_polynomial(f, tau + 1, [&](const Polynomial& e2) {
        const Branch b = classify((a1 + e1) - (a2 + e2), analysis, level);
        std::string reason;
        switch (b) {
          case Branch::kFoldedDifference:
            if (a1 == a2 || a2.degree() >= deg_m1) reason = "folded branch without a1 != a2, deg(a2) < deg(m1)";
            break;
          case Branch::kLargeResidue:
            if (a2.degree() < deg_m1) reason = "large branch with deg(a2) < deg(m1)";
            break;
          case Branch::kEqualResidues:
            if (a1 != a2) reason = "equal branch with a1 != a2";
            break;
        }
        if (reason.empty() && b != clean) reason = "branch differs from the error-free branch";
        if (!reason.empty()) out.push_back({a, e1, e2, b, std::move(reason)});
      });
    });
  });
  return out;
}

std::optional<BoundaryCounterexample> search_boundary_counterexample(
    const ModuliPairAnalysis& analysis, int level, std::uint64_t budget,
    std::uint64_t seed) {
  const LevelSpec& spec = analysis.level(level);
  const Field& f = analysis.field();
  const int tau = spec.error_bound_exclusive;
  for (std::uint64_t t = 0; t < budget; ++t) {
    Rng rng = trial_rng(seed, t);
    Polynomial a = sample_polynomial(f, spec.dynamic_range_exclusive, rng);
    Polynomial e1 = sample_error(f, tau, rng);
    Polynomial e2 = sample_error(f, tau, rng);
    TrialRecord rec = evaluate_trial(analysis, level, tau, a, e1, e2);
    rec.index = t;
    if (!rec.success) return BoundaryCounterexample{tau, std::move(rec)};
  }
  return std::nullopt;
}

}  // namespace polycrt
