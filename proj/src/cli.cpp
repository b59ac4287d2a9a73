// Copyright 2026 The fairdiv Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "fairdiv/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fairdiv/bundles.hpp"
#include "fairdiv/errors.hpp"
#include "fairdiv/experiments.hpp"
#include "fairdiv/model.hpp"
#include "fairdiv/oracle.hpp"
#include "fairdiv/undercut.hpp"
#include "json.hpp"

namespace fairdiv::cli {
namespace {

Profile LoadProfile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_profile(text.str());
}

std::string FormatSplit(const Profile& p, const std::optional<Split>& split) {
  if (!split) return "none";
  return p.name(Agent::kOne) + ":" + p.universe().Format(split->to_agent1) + " " +
         p.name(Agent::kTwo) + ":" + p.universe().Format(split->to_agent2);
}

std::string FormatFamily(const ObjectUniverse& u, const std::vector<ObjectSet>& sets) {
  std::string out = "[";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i > 0) out += ',';
    out += u.Format(sets[i]);
  }
  return out + "]";
}

struct SolveOptions {
  std::string file;
  std::string procedure = "simplified";
  int first = 1;
  std::string tie_break = "strict";
  bool trace = false;
  std::string trace_format = "text";
};

UndercutOptions ToUndercut(int first, const std::string& tie_break) {
  return {AgentFromNumber(first),
          tie_break == "index" ? TieBreak::kIndex : TieBreak::kStrict};
}

int Solve(const SolveOptions& o, std::ostream& out) {
  const Profile profile = LoadProfile(o.file);
  const UndercutOptions options = ToUndercut(o.first, o.tie_break);
  const Outcome outcome = o.procedure == "original"
                              ? original_undercut(profile, options)
                              : simplified_undercut(profile, options);
  out << "procedure: " << o.procedure << "\n"
      << "classification: " << ToString(outcome.classification) << "\n"
      << "proposer: "
      << (outcome.proposer ? profile.name(*outcome.proposer) : std::string("none"))
      << "\n"
      << "split: " << FormatSplit(profile, outcome.split) << "\n";
  if (o.trace) {
    out << "trace:\n";
    out << (o.trace_format == "json"
                ? TraceToJson(profile.universe(), outcome.trace)
                : FormatTrace(profile.universe(), outcome.trace));
  }
  return outcome.split ? kExitOk : kExitNoSplit;
}

int Bundles(const std::string& file, int agent, const std::string& ground_kind,
            const std::string& tie_break, std::ostream& out) {
  const Profile profile = LoadProfile(file);
  ObjectSet ground = profile.universe().all();
  if (ground_kind == "pile") {
    ground = generation_phase(profile, ToUndercut(1, tie_break).tie_break).pile;
  }
  out << "ground: " << profile.universe().Format(ground) << "\n";
  if (ground.empty()) return kExitOk;
  for (Agent a : {Agent::kOne, Agent::kTwo}) {
    if (agent != 0 && Number(a) != agent) continue;
    const MinimalBundleFamily family = minimal_bundles(profile, a, ground);
    out << "agent " << profile.name(a) << ": "
        << FormatFamily(profile.universe(), family.bundles) << "\n";
  }
  return kExitOk;
}

int Validate(const std::string& file, std::ostream& out) {
  const Profile profile = LoadProfile(file);
  for (Agent a : {Agent::kOne, Agent::kTwo}) {
    const PreferenceModel& pref = profile.pref(a);
    const ValidationReport reports[] = {all_desirable(pref), is_separable(pref),
                                        is_responsive(pref)};
    out << "agent " << profile.name(a) << ":";
    for (const auto& r : reports) {
      out << " " << ToString(r.property) << "=" << (r.holds ? "true" : "false");
    }
    out << "\n";
    for (const auto& r : reports) {
      if (r.witness) {
        out << "  " << ToString(r.property)
            << " witness: " << FormatWitness(profile.universe(), *r.witness) << "\n";
      }
    }
  }
  return kExitOk;
}

nlohmann::ordered_json LabelList(const ObjectUniverse& u, ObjectSet s) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (std::size_t i : s.members()) out.push_back(u.name(i));
  return out;
}

int Oracle(const std::string& file, std::ostream& out) {
  const Profile profile = LoadProfile(file);
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& c : oracle::enumerate_ef_splits(profile)) {
    nlohmann::ordered_json row;
    row["agent1"] = LabelList(profile.universe(), c.split.to_agent1);
    row["agent2"] = LabelList(profile.universe(), c.split.to_agent2);
    row["agent1_relation"] = std::string(oracle::ToString(c.agent1));
    row["agent2_relation"] = std::string(oracle::ToString(c.agent2));
    row["verdict"] = std::string(oracle::ToString(c.verdict));
    doc.push_back(std::move(row));
  }
  out << doc.dump(2) << "\n";
  return kExitOk;
}

int Compare(const std::string& file, int first, const std::string& tie_break,
            std::ostream& out) {
  const Profile profile = LoadProfile(file);
  const UndercutOptions options = ToUndercut(first, tie_break);
  auto row = [&](const std::string& name, const std::string& verdict,
                 const std::string& split) {
    out << std::left << std::setw(12) << name << std::setw(16) << verdict
        << split << "\n";
  };
  row("procedure", "classification", "split");
  const Outcome simplified = simplified_undercut(profile, options);
  row("simplified", std::string(ToString(simplified.classification)),
      FormatSplit(profile, simplified.split));
  try {
    const Outcome original = original_undercut(profile, options);
    row("original", std::string(ToString(original.classification)),
        FormatSplit(profile, original.split));
  } catch (const TieError& e) {
    row("original", "error", e.what());
  }
  const auto splits = oracle::enumerate_ef_splits(profile);
  const bool nontrivial =
      std::any_of(splits.begin(), splits.end(), [](const auto& c) {
        return c.verdict == oracle::Verdict::kEfNontrivial;
      });
  const std::string verdict = splits.empty() ? "no_ef_exists"
                              : nontrivial   ? "ef_nontrivial"
                                             : "ef_trivial";
  row("oracle", verdict, std::to_string(splits.size()) + " envy-free splits");
  return kExitOk;
}

struct SimulateOptions {
  std::size_t count = 0;
  std::size_t objects = 0;
  std::string generator = "additive";
  std::uint64_t seed = 0;
  std::string claims = "1:1";
  Utility value_min = 1;
  Utility value_max = 10;
  std::string csv;
};

Claims ParseClaims(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("claims must be c1:c2");
  try {
    std::size_t used1 = 0, used2 = 0;
    const std::string a = text.substr(0, colon), b = text.substr(colon + 1);
    if (a.empty() || b.empty() || a[0] == '-' || b[0] == '-') throw std::invalid_argument("");
    const Claims c{std::stoull(a, &used1), std::stoull(b, &used2)};
    if (used1 != a.size() || used2 != b.size()) throw std::invalid_argument("");
    return c;
  } catch (const std::exception&) {
    throw std::invalid_argument("claims must be c1:c2 with positive integers");
  }
}

int Simulate(const SimulateOptions& o, std::ostream& out) {
  experiments::BatchConfig config;
  config.count = o.count;
  config.n = o.objects;
  config.generator = o.generator == "separable-table"
                         ? experiments::Generator::kSeparableTable
                         : experiments::Generator::kAdditiveUniform;
  config.value_min = o.value_min;
  config.value_max = o.value_max;
  config.claims = ParseClaims(o.claims);
  config.seed = o.seed;
  const auto stats = experiments::compare_procedures(config);
  out << experiments::FormatSummary(stats);
  if (!o.csv.empty()) {
    std::ofstream csv(o.csv, std::ios::binary);
    if (!csv) throw std::runtime_error("cannot write '" + o.csv + "'");
    csv << experiments::FormatCsv(stats);
  }
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Two-agent envy-free division of indivisible objects"};
  app.name(args.empty() ? "fairdiv" : args[0]);
  app.require_subcommand(1);

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run an undercut procedure");
  solve_cmd->add_option("file", solve.file, "Profile JSON")->required();
  solve_cmd->add_option("--procedure", solve.procedure)
      ->check(CLI::IsMember({"simplified", "original"}));
  solve_cmd->add_option("--first", solve.first, "Agent scanned first")
      ->check(CLI::IsMember({1, 2}));
  solve_cmd->add_option("--tie-break", solve.tie_break)
      ->check(CLI::IsMember({"strict", "index"}));
  solve_cmd->add_flag("--trace", solve.trace, "Print the step trace");
  solve_cmd->add_option("--trace-format", solve.trace_format)
      ->check(CLI::IsMember({"text", "json"}));

  std::string file;
  int agent = 0;
  std::string ground = "all";
  std::string tie_break = "strict";
  int first = 1;
  auto* bundles_cmd = app.add_subcommand("bundles", "List minimal bundles");
  bundles_cmd->add_option("file", file)->required();
  bundles_cmd->add_option("--agent", agent)->check(CLI::IsMember({1, 2}));
  bundles_cmd->add_option("--ground", ground)->check(CLI::IsMember({"all", "pile"}));
  bundles_cmd->add_option("--tie-break", tie_break)
      ->check(CLI::IsMember({"strict", "index"}));

  auto* validate_cmd = app.add_subcommand("validate", "Check preference classes");
  validate_cmd->add_option("file", file)->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "List every envy-free split");
  oracle_cmd->add_option("file", file)->required();

  auto* compare_cmd =
      app.add_subcommand("compare", "Both procedures and the oracle on one profile");
  compare_cmd->add_option("file", file)->required();
  compare_cmd->add_option("--first", first)->check(CLI::IsMember({1, 2}));
  compare_cmd->add_option("--tie-break", tie_break)
      ->check(CLI::IsMember({"strict", "index"}));

  SimulateOptions sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Batch comparison on random profiles");
  sim_cmd->add_option("--count", sim.count)->required();
  sim_cmd->add_option("--objects", sim.objects)->required();
  sim_cmd->add_option("--generator", sim.generator)
      ->check(CLI::IsMember({"additive", "separable-table"}));
  sim_cmd->add_option("--seed", sim.seed)->required();
  sim_cmd->add_option("--claims", sim.claims, "c1:c2");
  sim_cmd->add_option("--min", sim.value_min, "Smallest additive value");
  sim_cmd->add_option("--max", sim.value_max, "Largest additive value");
  sim_cmd->add_option("--csv", sim.csv, "Per-profile CSV output path");

  std::vector<std::string> rest(args.rbegin(), args.rend());
  if (!rest.empty()) rest.pop_back();
  try {
    app.parse(std::move(rest));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*solve_cmd) return Solve(solve, out);
    if (*bundles_cmd) return Bundles(file, agent, ground, tie_break, out);
    if (*validate_cmd) return Validate(file, out);
    if (*oracle_cmd) return Oracle(file, out);
    if (*compare_cmd) return Compare(file, first, tie_break, out);
    if (*sim_cmd) return Simulate(sim, out);
  } catch (const std::exception& e) {
    std::string what = e.what();
    std::replace(what.begin(), what.end(), '\n', ' ');
    err << "error: " << what << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace fairdiv::cli
