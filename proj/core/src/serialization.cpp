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

#include "polycrt/serialization.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <sstream>
#include <vector>

namespace polycrt {

namespace {

using nlohmann::json;

json degree_json(Degree d) {
  if (!d.is_finite()) return nullptr;
  return d.value();
}

std::string roman(int n) {
  static constexpr std::array<std::pair<int, const char*>, 13> kTable{{
      {1000, "M"}, {900, "CM"}, {500, "D"}, {400, "CD"}, {100, "C"}, {90, "XC"},
      {50, "L"}, {40, "XL"}, {10, "X"}, {9, "IX"}, {5, "V"}, {4, "IV"}, {1, "I"},
  }};
  std::string out;
  for (const auto& [value, sym] : kTable) {
    while (n >= value) {
      out += sym;
      n -= value;
    }
  }
  return out;
}

}  // namespace

std::string level_label(const ModuliPairAnalysis& analysis, int level) {
  return roman(analysis.max_level() + 1 - level);
}

json to_json(const LevelSpec& level) {
  return {
      {"level", level.level},
      {"sigmaDeg", level.sigma_degree},
      {"errorBoundExclusive", level.error_bound_exclusive},
      {"dynamicRangeExclusive", level.dynamic_range_exclusive},
  };
}

json to_json(const ModuliPairAnalysis& analysis) {
  json sigma = json::array();
  for (const auto& s : analysis.sigma_chain()) sigma.push_back(poly_format(s));
  json levels = json::array();
  for (const auto& l : analysis.levels()) levels.push_back(to_json(l));
  return {
      {"p", analysis.field().characteristic()},
      {"m1", poly_format(analysis.m1())},
      {"m2", poly_format(analysis.m2())},
      {"swapped", analysis.swapped()},
      {"m", poly_format(analysis.gcd())},
      {"gamma1", poly_format(analysis.gamma1())},
      {"gamma2", poly_format(analysis.gamma2())},
      {"gammaInv21", poly_format(analysis.gamma2_inv())},
      {"M", poly_format(analysis.lcm())},
      {"degM", analysis.deg_lcm()},
      {"K", analysis.k()},
      {"sigma", std::move(sigma)},
      {"levels", std::move(levels)},
  };
}

json to_json(const Encoding& encoding) {
  return {
      {"a1", poly_format(encoding.residues.a1)},
      {"a2", poly_format(encoding.residues.a2)},
      {"k1", poly_format(encoding.folding.k1)},
      {"k2", poly_format(encoding.folding.k2)},
  };
}

json to_json(const ReconstructionResult& result) {
  return {
      {"aHat", poly_format(result.a_hat)},
      {"k2Hat", poly_format(result.k2_hat)},
      {"branch", branch_name(result.branch)},
      {"q21", poly_format(result.q21)},
      {"cascadeTail", poly_format(result.cascade_tail)},
  };
}

json to_json(const TrialRecord& record) {
  json j = {
      {"trial", record.index},
      {"a", poly_format(record.a)},
      {"e1", poly_format(record.e1)},
      {"e2", poly_format(record.e2)},
      {"r1", poly_format(record.r1)},
      {"r2", poly_format(record.r2)},
      {"branch", record.branch ? json(branch_name(*record.branch)) : json(nullptr)},
      {"k2Match", record.k2_match},
      {"residualIsE2", record.residual_is_e2},
      {"errDeg", degree_json(record.error_degree)},
      {"success", record.success},
  };
  if (!record.error.empty()) j["error"] = record.error;
  return j;
}

json to_json(const TrialReport& report, const ModuliPairAnalysis& analysis) {
  const TrialConfig& c = report.config;
  json branch_counts = json::object();
  for (Branch b : {Branch::kFoldedDifference, Branch::kLargeResidue,
                   Branch::kEqualResidues}) {
    branch_counts[std::string(branch_name(b))] =
        report.branch_counts[static_cast<std::size_t>(b)];
  }
  json failures = json::array();
  for (const auto& rec : report.trials) {
    if (!rec.success) failures.push_back(to_json(rec));
  }
  return {
      {"config",
       {
           {"p", analysis.field().characteristic()},
           {"m1", poly_format(analysis.m1())},
           {"m2", poly_format(analysis.m2())},
           {"level", c.level},
           {"tau", c.tau},
           {"trials", c.trials},
           {"seed", c.seed},
           {"boundary", c.boundary},
           {"errorBoundExclusive", report.error_bound_exclusive},
           {"dynamicRangeExclusive", report.dynamic_range_exclusive},
       }},
      {"successes", report.successes},
      {"failures", std::move(failures)},
      {"failureCount", report.failures},
      {"decoderErrors", report.decoder_errors},
      {"maxErrDeg", degree_json(report.max_error_degree)},
      {"branchCounts", std::move(branch_counts)},
  };
}

std::string render_level_table(const ModuliPairAnalysis& analysis) {
  const std::array<std::string, 5> header{"i", "level", "deg(sigma_i)",
                                          "residue error bound", "dynamic range"};
  std::vector<std::array<std::string, 5>> rows;
  for (const auto& l : analysis.levels()) {
    rows.push_back({
        std::to_string(l.level),
        level_label(analysis, l.level),
        std::to_string(l.sigma_degree),
        "tau < " + std::to_string(analysis.deg_m()) + "+" +
            std::to_string(l.sigma_degree) + "=" +
            std::to_string(l.error_bound_exclusive),
        "deg(a) < " + std::to_string(analysis.deg_lcm()) + "-" +
            std::to_string(l.sigma_degree) + "=" +
            std::to_string(l.dynamic_range_exclusive),
    });
  }
  std::array<std::size_t, 5> width{};
  for (std::size_t c = 0; c < 5; ++c) {
    width[c] = header[c].size();
    for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream os;
  auto emit = [&](const std::array<std::string, 5>& r) {
    for (std::size_t c = 0; c + 1 < 5; ++c) {
      os << std::left << std::setw(static_cast<int>(width[c])) << r[c] << "  ";
    }
    os << r[4] << "\n";
  };
  emit(header);
  for (const auto& r : rows) emit(r);
  return os.str();
}

std::string render_analysis(const ModuliPairAnalysis& analysis) {
  std::ostringstream os;
  os << "m1: " << analysis.m1() << "\n"
     << "m2: " << analysis.m2() << "\n"
     << "m: " << analysis.gcd() << "\n"
     << "gamma1: " << analysis.gamma1() << "\n"
     << "gamma2: " << analysis.gamma2() << "\n"
     << "gammaInv21: " << analysis.gamma2_inv() << "\n"
     << "degM: " << analysis.deg_lcm() << "\n"
     << "K: " << analysis.k() << "\n";
  for (int i = 1; i <= analysis.max_level(); ++i) {
    os << "sigma_" << i << ": " << analysis.sigma(i) << "\n";
  }
  return os.str();
}

std::string render_report(const TrialReport& report) {
  const TrialConfig& c = report.config;
  std::ostringstream os;
  os << "level: " << c.level << "\n"
     << "tau: " << c.tau << " (bound tau < " << report.error_bound_exclusive
     << (c.boundary ? ", boundary mode" : "") << ")\n"
     << "dynamic range: deg(a) < " << report.dynamic_range_exclusive << "\n"
     << "trials: " << c.trials << "\n"
     << "seed: " << c.seed << "\n"
     << "successes: " << report.successes << "\n"
     << "failures: " << report.failures << "\n"
     << "decoder errors: " << report.decoder_errors << "\n"
     << "max deg(a_hat - a): " << report.max_error_degree << "\n";
  for (Branch b : {Branch::kFoldedDifference, Branch::kLargeResidue,
                   Branch::kEqualResidues}) {
    os << branch_name(b) << ": " << report.branch_counts[static_cast<std::size_t>(b)]
       << "\n";
  }
  return os.str();
}

}  // namespace polycrt
