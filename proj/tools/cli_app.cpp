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

#include "cli_app.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "polycrt/crt.hpp"
#include "polycrt/error.hpp"
#include "polycrt/level_analysis.hpp"
#include "polycrt/polynomial.hpp"
#include "polycrt/robust_decoder.hpp"
#include "polycrt/serialization.hpp"
#include "polycrt/simulation.hpp"

namespace polycrt::cli {

namespace {

using nlohmann::json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCoprimeModuli:
    case ErrorCode::kDegenerateModuli:
      return kBadModuli;
    case ErrorCode::kDegreeOutOfRange:
      return kDegreeOutOfRange;
    case ErrorCode::kInexactDivision:
      return kInexactDivision;
    case ErrorCode::kInconsistentResidues:
      return kInconsistentResidues;
    case ErrorCode::kTooFewModuli:
      return kTooFewModuli;
    default:
      return kUsage;
  }
}

struct Globals {
  std::uint64_t p = 2;
  std::string format = "text";
};

// Per-subcommand inputs; every command reads only what it registered.
struct Inputs {
  std::string m1, m2, poly, r1, r2, e1, e2;
  std::vector<std::string> moduli;
  int tau = -1;
  std::optional<int> level;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  unsigned threads = 1;
  bool boundary = false;
};

class Session {
 public:
  Session(const Globals& g, const Inputs& in, std::ostream& out, std::ostream& err)
      : globals_(g), in_(in), out_(out), err_(err), field_(g.p) {}

  int analyze() {
    const auto an = analysis();
    if (json_mode()) {
      out_ << to_json(an).dump(2) << "\n";
    } else {
      out_ << render_analysis(an) << "\n" << render_level_table(an);
    }
    return kOk;
  }

  int encode_cmd() {
    const auto an = analysis();
    const Encoding enc = encode(parse(in_.poly), an);
    if (json_mode()) {
      out_ << to_json(enc).dump(2) << "\n";
    } else {
      out_ << "a1: " << enc.residues.a1 << "\n"
           << "a2: " << enc.residues.a2 << "\n"
           << "k1: " << enc.folding.k1 << "\n"
           << "k2: " << enc.folding.k2 << "\n";
    }
    return kOk;
  }

  int corrupt() {
    if (in_.tau < -1) throw Error(ErrorCode::kInvalidConfig, "--tau must be >= -1");
    const Polynomial r1 = parse(in_.r1);
    const Polynomial r2 = parse(in_.r2);
    Rng rng = trial_rng(in_.seed, 0);
    // Both errors are always drawn so an override of one leaves the other
    // identical to the non-overridden run.
    Polynomial e1 = sample_error(field_, in_.tau, rng);
    Polynomial e2 = sample_error(field_, in_.tau, rng);
    if (!in_.e1.empty()) e1 = parse(in_.e1);
    if (!in_.e2.empty()) e2 = parse(in_.e2);
    const Polynomial c1 = r1 + e1;
    const Polynomial c2 = r2 + e2;
    if (json_mode()) {
      out_ << json{{"r1", poly_format(c1)}, {"r2", poly_format(c2)},
                   {"e1", poly_format(e1)}, {"e2", poly_format(e2)}}
                  .dump(2)
           << "\n";
    } else {
      out_ << "r1: " << c1 << "\n"
           << "r2: " << c2 << "\n"
           << "e1: " << e1 << "\n"
           << "e2: " << e2 << "\n";
    }
    return kOk;
  }

  int reconstruct_cmd() {
    const auto an = analysis();
    const ResiduePair r = residues(an);
    const int level = in_.level.value_or(an.max_level());
    const ReconstructionResult res = reconstruct({r.a1, r.a2}, an, level);
    if (json_mode()) {
      json j = to_json(res);
      j["level"] = level;
      out_ << j.dump(2) << "\n";
    } else {
      out_ << "level: " << level << "\n"
           << "branch: " << branch_name(res.branch) << "\n"
           << "q21: " << res.q21 << "\n"
           << "cascadeTail: " << res.cascade_tail << "\n"
           << "k2Hat: " << res.k2_hat << "\n"
           << "aHat: " << res.a_hat << "\n";
    }
    return kOk;
  }

  int crt_cmd() {
    const auto an = analysis();
    const Polynomial a = crt_pair(residues(an), an);
    if (json_mode()) {
      out_ << json{{"a", poly_format(a)}}.dump(2) << "\n";
    } else {
      out_ << a << "\n";
    }
    return kOk;
  }

  int bound() {
    std::vector<Polynomial> moduli;
    for (const auto& group : in_.moduli) {
      for (const auto& text : split_moduli(group)) moduli.push_back(parse(text));
    }
    const int b = multi_moduli_error_bound(moduli);
    if (json_mode()) {
      out_ << json{{"moduli", moduli.size()}, {"errorBoundExclusive", b}}.dump(2) << "\n";
    } else {
      out_ << b << "\n";
    }
    return kOk;
  }

  int simulate() {
    const auto an = analysis();
    const TrialConfig config{
        .level = in_.level.value_or(an.max_level()),
        .tau = in_.tau,
        .trials = in_.trials,
        .seed = in_.seed,
        .boundary = in_.boundary,
        .threads = std::max(1u, in_.threads),
    };
    const TrialReport report = run_campaign(an, config);
    if (json_mode()) {
      out_ << to_json(report, an).dump(2) << "\n";
    } else {
      out_ << render_report(report);
    }
    if (report.failures > 0 && !config.boundary) {
      err_ << "error: " << report.failures << " of " << config.trials
           << " trials failed inside the guaranteed error bound\n";
      return kGuaranteeFailures;
    }
    return kOk;
  }

 private:
  bool json_mode() const { return globals_.format == "json"; }

  Polynomial parse(const std::string& text) const { return poly_parse(text, field_); }

  ModuliPairAnalysis analysis() {
    auto an = analyze_pair(parse(in_.m1), parse(in_.m2));
    if (an.swapped()) {
      err_ << "note: inputs swapped so that deg(m1) <= deg(m2); "
              "residues are reordered to match\n";
    }
    return an;
  }

  // Residues given for the moduli as typed, reordered if the analysis
  // swapped the moduli.
  ResiduePair residues(const ModuliPairAnalysis& an) const {
    Polynomial r1 = parse(in_.r1);
    Polynomial r2 = parse(in_.r2);
    if (an.swapped()) std::swap(r1, r2);
    return {std::move(r1), std::move(r2)};
  }

  const Globals& globals_;
  const Inputs& in_;
  std::ostream& out_;
  std::ostream& err_;
  Field field_;
};

}  // namespace

std::vector<std::string> split_moduli(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(std::move(current));
  return parts;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Robust Chinese remaindering for polynomials over prime fields", "polycrt"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  Inputs in;
  app.add_option("--p", globals.p, "Field characteristic (prime <= 2^31)")
      ->capture_default_str();
  app.add_option("--format", globals.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto add_moduli = [&](CLI::App* sub) {
    sub->add_option("--m1", in.m1, "First modulus")->required();
    sub->add_option("--m2", in.m2, "Second modulus")->required();
  };
  auto add_residues = [&](CLI::App* sub) {
    sub->add_option("--r1", in.r1, "Residue modulo m1")->required();
    sub->add_option("--r2", in.r2, "Residue modulo m2")->required();
  };

  std::function<int(Session&)> action;

  auto* analyze = app.add_subcommand("analyze", "Moduli analysis and level table");
  add_moduli(analyze);
  analyze->callback([&] { action = &Session::analyze; });

  auto* encode = app.add_subcommand("encode", "Residues and folding quotients of a polynomial");
  add_moduli(encode);
  encode->add_option("--poly,-a", in.poly, "Polynomial to encode")->required();
  encode->callback([&] { action = &Session::encode_cmd; });

  auto* corrupt = app.add_subcommand("corrupt", "Add seeded random errors to residues");
  add_residues(corrupt);
  corrupt->add_option("--tau", in.tau, "Error degree bound (-1: no error)")->capture_default_str();
  corrupt->add_option("--seed", in.seed)->capture_default_str();
  corrupt->add_option("--e1", in.e1, "Use this error for r1 instead of a random one");
  corrupt->add_option("--e2", in.e2, "Use this error for r2 instead of a random one");
  corrupt->callback([&] { action = &Session::corrupt; });

  auto* reconstruct = app.add_subcommand("reconstruct", "Robust reconstruction at a level");
  add_moduli(reconstruct);
  add_residues(reconstruct);
  reconstruct->add_option("--level", in.level, "Level 1..K+1 (default: K+1)");
  reconstruct->callback([&] { action = &Session::reconstruct_cmd; });

  auto* crt = app.add_subcommand("crt", "Exact reconstruction from consistent residues");
  add_moduli(crt);
  add_residues(crt);
  crt->callback([&] { action = &Session::crt_cmd; });

  auto* bound = app.add_subcommand("bound", "Residue error bound for a set of moduli");
  bound->add_option("--moduli", in.moduli, "Comma-separated moduli (repeatable)")
      ->required()
      ->allow_extra_args(false);  // keep "[c0,c1,...]" moduli intact
  bound->callback([&] { action = &Session::bound; });

  auto* simulate = app.add_subcommand("simulate", "Seeded Monte-Carlo robustness campaign");
  add_moduli(simulate);
  simulate->add_option("--level", in.level, "Level 1..K+1 (default: K+1)");
  simulate->add_option("--tau", in.tau)->capture_default_str();
  simulate->add_option("--trials", in.trials)->capture_default_str();
  simulate->add_option("--seed", in.seed)->capture_default_str();
  simulate->add_option("--threads", in.threads)->capture_default_str();
  simulate->add_flag("--boundary", in.boundary, "Allow tau at or beyond the bound");
  simulate->callback([&] { action = &Session::simulate; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Session session(globals, in, out, err);
    return action(session);
  } catch (const Error& e) {
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace polycrt::cli
