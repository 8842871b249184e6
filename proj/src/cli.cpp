// Copyright 2026 The fcnot Authors
//
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

#include "fcnot/cli.hpp"

#include <iomanip>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include "fcnot/boolfn.hpp"
#include "fcnot/export.hpp"
#include "fcnot/sim.hpp"
#include "fcnot/synth.hpp"
#include <nlohmann/json.hpp>

namespace fcnot {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ConstructionKind parse_construction(const std::string& name) {
  if (auto kind = construction_from_name(name)) return *kind;
  std::string known;
  for (ConstructionKind k : kAllConstructions) {
    if (!known.empty()) known += ", ";
    known += construction_name(k);
  }
  throw UsageError("unknown construction '" + name + "' (expected one of " + known + ")");
}

std::string stats_json(const SynthesisResult& r) {
  nlohmann::ordered_json j;
  j["qubits"] = r.counts.qubits;
  j["ancillas"] = r.ancilla_count;
  j["cnot"] = r.counts.cnot;
  j["r1_total"] = r.counts.r1_total;
  j["r1_non_clifford"] = r.counts.r1_non_clifford;
  j["rotation_depth"] = r.rotation_depth;
  j["measurements"] = r.counts.measurements;
  return j.dump();
}

struct SynthArgs {
  std::string func;
  std::string construction;
  std::string out = "text";
  bool merge_s = false;
  std::size_t width = 120;
};

struct VerifyArgs {
  std::string func;
  std::string construction;
  std::size_t random_states = 20;
  std::uint64_t seed = 1;
  double tol = 1e-9;
  bool json = false;
};

struct TableArgs {
  int n = 0;
  std::string construction;
  std::size_t sample = 0;
  std::uint64_t seed = 1;
};

// Synthesizes after checking the size cap; nullopt means "too large".
std::optional<SynthesisResult> checked_synthesis(ConstructionKind kind, const TruthTable& f,
                                                 bool merge_s) {
  if (expected_qubits(kind, f.num_vars()) > kMaxSynthQubits) return std::nullopt;
  SynthesisResult result = synthesize(kind, f);
  if (merge_s) {
    result.circuit = merge_s_gate(result.circuit);
    refresh_metrics(result);
  }
  return result;
}

int cmd_synth(const SynthArgs& a, std::ostream& out, std::ostream& err) {
  const ConstructionKind kind = parse_construction(a.construction);
  if (a.out != "text" && a.out != "qasm") throw UsageError("--out must be text or qasm");
  const TruthTable f = parse_function(a.func);
  const auto result = checked_synthesis(kind, f, a.merge_s);
  if (!result) {
    err << "error: " << construction_name(kind) << " at n=" << f.num_vars()
        << " exceeds " << kMaxSynthQubits << " qubits\n";
    return kExitUnsupportedSize;
  }
  if (a.out == "qasm") {
    out << to_qasm(result->circuit);
  } else {
    out << to_text_diagram(result->circuit, {a.width});
  }
  return kExitOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream&) {
  const ConstructionKind kind = parse_construction(a.construction);
  const TruthTable f = parse_function(a.func);
  const VerifyOptions options{a.random_states, a.seed, a.tol};
  const std::size_t qubits = expected_qubits(kind, f.num_vars());
  const VerificationReport report =
      qubits > kMaxSimQubits
          ? unverifiable_report(qubits, options, std::string(construction_name(kind)), f.to_hex())
          : verify(synthesize(kind, f), f, options);
  out << (a.json ? to_json(report) + "\n" : to_text(report));
  switch (report.verdict) {
    case Verdict::Pass: return kExitOk;
    case Verdict::Fail: return kExitVerifyFailed;
    case Verdict::Unverifiable: return kExitUnsupportedSize;
  }
  return kExitVerifyFailed;
}

int cmd_stats(const std::string& func, const std::string& construction, bool merge_s,
              std::ostream& out, std::ostream& err) {
  const ConstructionKind kind = parse_construction(construction);
  const TruthTable f = parse_function(func);
  const auto result = checked_synthesis(kind, f, merge_s);
  if (!result) {
    err << "error: " << construction_name(kind) << " at n=" << f.num_vars()
        << " exceeds " << kMaxSynthQubits << " qubits\n";
    return kExitUnsupportedSize;
  }
  out << stats_json(*result) << "\n";
  return kExitOk;
}

int cmd_spectrum(const std::string& func, std::ostream& out) {
  const TruthTable f = parse_function(func);
  const SpectralData sd = spectrum(f);
  const AngleTable theta = angles(sd);
  out << std::left << std::setw(8) << "index" << std::setw(10) << "s" << std::setw(14)
      << "theta" << "clifford\n";
  for (std::size_t j = 0; j < theta.angles.size(); ++j) {
    out << std::setw(8) << j << std::setw(10) << sd.coefficients(static_cast<Eigen::Index>(j))
        << std::setw(14) << theta[j].to_expression() << (theta[j].is_clifford() ? "yes" : "no")
        << "\n";
  }
  return kExitOk;
}

int cmd_table(const TableArgs& a, std::ostream& out) {
  const ConstructionKind kind = parse_construction(a.construction);
  if (a.n < 1 || a.n > kMaxVariables) throw UsageError("--n must be in [1, 16]");
  if (a.sample == 0 && a.n > 3) throw UsageError("exhaustive sweeps need n <= 3; pass --sample");

  std::vector<TruthTable> functions;
  if (a.sample == 0) {
    const std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << a.n);
    for (std::uint64_t i = 0; i < count; ++i) functions.push_back(TruthTable::from_index(a.n, i));
  } else {
    std::mt19937_64 rng(a.seed);
    for (std::size_t i = 0; i < a.sample; ++i) functions.push_back(TruthTable::random(a.n, rng));
  }

  out << "index,function,qubits,ancillas,cnot,r1_total,r1_non_clifford,rotation_depth,"
         "measurements,verdict\n";
  const VerifyOptions options{20, a.seed, 1e-9};
  for (std::size_t i = 0; i < functions.size(); ++i) {
    const TruthTable& f = functions[i];
    const auto result = checked_synthesis(kind, f, false);
    if (!result) {
      out << i << "," << f.to_hex() << ",,,,,,,,UNSUPPORTED\n";
      continue;
    }
    const Verdict verdict = result->counts.qubits > kMaxSimQubits
                                ? Verdict::Unverifiable
                                : verify(*result, f, options).verdict;
    out << i << "," << f.to_hex() << "," << result->counts.qubits << ","
        << result->ancilla_count << "," << result->counts.cnot << "," << result->counts.r1_total
        << "," << result->counts.r1_non_clifford << "," << result->rotation_depth << ","
        << result->counts.measurements << "," << verdict_name(verdict) << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral synthesis of functionally controlled NOT gates", "fcnot"};
  app.require_subcommand(1);

  const std::string construction_help =
      "general-lowwidth | general-depth1 | and-lowwidth | and-depth1 | anddg-lowwidth | "
      "anddg-depth1";

  SynthArgs synth_args;
  auto* synth = app.add_subcommand("synth", "Print the circuit for a function");
  synth->add_option("--func", synth_args.func, "0x<hex>:<n> or expression over x1..xn")->required();
  synth->add_option("--construction", synth_args.construction, construction_help)->required();
  synth->add_option("--out", synth_args.out, "text | qasm");
  synth->add_flag("--merge-s", synth_args.merge_s, "Fold the leading S into R1dg(theta_0)");
  synth->add_option("--width", synth_args.width, "Diagram wrap width (0 = no wrap)");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Simulate the circuit against the oracle");
  verify_cmd->add_option("--func", verify_args.func)->required();
  verify_cmd->add_option("--construction", verify_args.construction, construction_help)->required();
  verify_cmd->add_option("--random-states", verify_args.random_states);
  verify_cmd->add_option("--seed", verify_args.seed);
  verify_cmd->add_option("--tol", verify_args.tol);
  verify_cmd->add_flag("--json", verify_args.json);

  std::string stats_func, stats_construction;
  bool stats_merge = false;
  auto* stats = app.add_subcommand("stats", "Resource counts as JSON");
  stats->add_option("--func", stats_func)->required();
  stats->add_option("--construction", stats_construction, construction_help)->required();
  stats->add_flag("--merge-s", stats_merge);

  std::string spectrum_func;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Spectral coefficients and angles");
  spectrum_cmd->add_option("--func", spectrum_func)->required();

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "CSV sweep over functions");
  table->add_option("--n", table_args.n)->required();
  table->add_option("--construction", table_args.construction, construction_help)->required();
  table->add_option("--sample", table_args.sample, "Random functions instead of all");
  table->add_option("--seed", table_args.seed);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  }

  try {
    if (synth->parsed()) return cmd_synth(synth_args, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify_args, out, err);
    if (stats->parsed()) return cmd_stats(stats_func, stats_construction, stats_merge, out, err);
    if (spectrum_cmd->parsed()) return cmd_spectrum(spectrum_func, out);
    if (table->parsed()) return cmd_table(table_args, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  }
  return kExitParseError;
}

}  // namespace fcnot
