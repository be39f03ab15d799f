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

#include <string>

#include <nlohmann/json.hpp>

#include "polycrt/crt.hpp"
#include "polycrt/level_analysis.hpp"
#include "polycrt/robust_decoder.hpp"
#include "polycrt/simulation.hpp"

// JSON and plain-text renderings of the library's results. Every polynomial
// is written in the canonical term form accepted back by poly_parse.

namespace polycrt {

nlohmann::json to_json(const LevelSpec& level);
/// Fields: m1, m2, m, gamma1, gamma2, gammaInv21, M, degM, K, sigma[],
/// swapped, levels[].
nlohmann::json to_json(const ModuliPairAnalysis& analysis);
/// Fields: a1, a2, k1, k2.
nlohmann::json to_json(const Encoding& encoding);
/// Fields: aHat, k2Hat, branch, q21, cascadeTail.
nlohmann::json to_json(const ReconstructionResult& result);
nlohmann::json to_json(const TrialRecord& record);
/// Fields: config, successes, failures, decoderErrors, maxErrDeg,
/// branchCounts, failures[] (replay inputs of every failed trial).
nlohmann::json to_json(const TrialReport& report, const ModuliPairAnalysis& analysis);

/// Aligned table with columns level, deg(sigma_i), residue error bound,
/// dynamic range; one row per level in increasing dynamic range.
std::string render_level_table(const ModuliPairAnalysis& analysis);

std::string render_analysis(const ModuliPairAnalysis& analysis);

std::string render_report(const TrialReport& report);

/// Roman numeral label of level i, counted from the top level (K+1 -> "I").
std::string level_label(const ModuliPairAnalysis& analysis, int level);

}  // namespace polycrt
