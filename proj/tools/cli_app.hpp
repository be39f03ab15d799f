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

#include <iosfwd>
#include <string>
#include <vector>

namespace polycrt::cli {

/// Process exit codes. Stable: scripts may depend on them.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,              // bad flags, unparsable polynomial, bad config/level/prime
  kBadModuli = 3,          // coprime or degenerate moduli
  kDegreeOutOfRange = 4,
  kInexactDivision = 5,
  kInconsistentResidues = 6,
  kTooFewModuli = 7,
  kGuaranteeFailures = 8,  // simulate found failures outside boundary mode
};

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Splits a comma-separated moduli list, ignoring commas inside brackets
/// so that "[1,1],x^2" yields two entries.
std::vector<std::string> split_moduli(const std::string& text);

}  // namespace polycrt::cli
