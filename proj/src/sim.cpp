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

#include "fcnot/sim.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace fcnot {

namespace {

std::uint64_t embed(std::uint64_t logical, const Layout& layout) {
  std::uint64_t physical = 0;
  for (std::size_t i = 0; i < layout.controls.size(); ++i) {
    if ((logical >> i) & 1U) physical |= std::uint64_t{1} << layout.controls[i];
  }
  if ((logical >> layout.controls.size()) & 1U) physical |= std::uint64_t{1} << layout.target;
  return physical;
}

std::string describe_input(std::uint64_t logical, int n) {
  std::string s = "|x=";
  for (int i = n; i-- > 0;) s += ((logical >> i) & 1U) ? '1' : '0';
  s += ",y=";
  s += ((logical >> n) & 1U) ? '1' : '0';
  return s + ">";
}

std::string describe_branch(const std::vector<MeasurementRecord>& outcomes) {
  if (outcomes.empty()) return "";
  std::string s = " branch [";
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (i) s += ",";
    s += "q" + std::to_string(outcomes[i].qubit) + "=" + std::to_string(outcomes[i].outcome);
  }
  return s + "]";
}

}  // namespace

StateVector random_state(std::size_t qubits, const std::vector<std::uint64_t>& support,
                         std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  StateVector psi = StateVector::Zero(Eigen::Index{1} << qubits);
  for (std::uint64_t index : support) {
    const double re = normal(rng);
    const double im = normal(rng);
    psi(static_cast<Eigen::Index>(index)) = {re, im};
  }
  psi.normalize();
  return psi;
}

OracleMode oracle_mode(ConstructionKind kind) {
  switch (target_contract(kind)) {
    case TargetContract::Arbitrary: return OracleMode::General;
    case TargetContract::Zero: return OracleMode::TargetZero;
    case TargetContract::FOfX: return OracleMode::TargetFx;
  }
  return OracleMode::General;
}

namespace {

std::function<bool(std::uint64_t)> legal_predicate(const TruthTable& f, OracleMode mode) {
  const int n = f.num_vars();
  const std::uint64_t xmask = (std::uint64_t{1} << n) - 1;
  switch (mode) {
    case OracleMode::General:
      return [](std::uint64_t) { return true; };
    case OracleMode::TargetZero:
      return [n](std::uint64_t l) { return ((l >> n) & 1U) == 0; };
    case OracleMode::TargetFx:
      return [f, n, xmask](std::uint64_t l) { return ((l >> n) & 1U) == f.evaluate(l & xmask); };
  }
  return {};
}

}  // namespace

BasisAction oracle_unitary(const TruthTable& f, OracleMode mode) {
  const int n = f.num_vars();
  const std::uint64_t xmask = (std::uint64_t{1} << n) - 1;
  BasisAction action;
  action.num_vars = n;
  action.legal = legal_predicate(f, mode);
  action.image = [f, n, xmask](std::uint64_t l) {
    return f.evaluate(l & xmask) ? l ^ (std::uint64_t{1} << n) : l;
  };
  return action;
}

BasisAction identity_action(const TruthTable& f, OracleMode mode) {
  BasisAction action;
  action.num_vars = f.num_vars();
  action.legal = legal_predicate(f, mode);
  action.image = [](std::uint64_t l) { return l; };
  return action;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Unverifiable: return "UNVERIFIABLE";
  }
  return "?";
}

std::string to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["construction"] = r.construction;
  j["function"] = r.function;
  j["qubits"] = r.qubits;
  j["basis_inputs"] = r.basis_inputs;
  j["random_inputs"] = r.random_inputs;
  j["seed"] = r.seed;
  j["tolerance"] = r.tolerance;
  j["branches_checked"] = r.branches_checked;
  j["max_infidelity"] = r.max_infidelity;
  j["ancillas_restored"] = r.ancillas_restored;
  j["verdict"] = verdict_name(r.verdict);
  if (r.counterexample.empty()) {
    j["counterexample"] = nullptr;
  } else {
    j["counterexample"] = r.counterexample;
  }
  return j.dump(2);
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "construction:      " << r.construction << "\n"
     << "function:          " << r.function << "\n"
     << "qubits:            " << r.qubits << "\n"
     << "basis inputs:      " << r.basis_inputs << "\n"
     << "random inputs:     " << r.random_inputs << " (seed " << r.seed << ")\n"
     << "branches checked:  " << r.branches_checked << "\n"
     << "max infidelity:    " << r.max_infidelity << " (tolerance " << r.tolerance << ")\n"
     << "ancillas restored: " << (r.ancillas_restored ? "yes" : "no") << "\n"
     << "verdict:           " << verdict_name(r.verdict) << "\n";
  if (!r.counterexample.empty()) os << "counterexample:    " << r.counterexample << "\n";
  return os.str();
}

VerificationReport unverifiable_report(std::size_t qubits, const VerifyOptions& options,
                                       std::string construction_label,
                                       std::string function_label) {
  VerificationReport report;
  report.construction = std::move(construction_label);
  report.function = std::move(function_label);
  report.qubits = qubits;
  report.seed = options.seed;
  report.tolerance = options.tolerance;
  report.verdict = Verdict::Unverifiable;
  report.counterexample = "unverifiable at this size: " + std::to_string(qubits) +
                          " qubits exceeds the simulator cap of " + std::to_string(kMaxSimQubits);
  return report;
}

VerificationReport verify_action(const Circuit& c, const Layout& layout,
                                 const BasisAction& action, const VerifyOptions& options,
                                 std::string construction_label, std::string function_label) {
  if (c.qubit_count() > kMaxSimQubits) {
    return unverifiable_report(c.qubit_count(), options, std::move(construction_label),
                               std::move(function_label));
  }
  VerificationReport report;
  report.construction = std::move(construction_label);
  report.function = std::move(function_label);
  report.qubits = c.qubit_count();
  report.seed = options.seed;
  report.tolerance = options.tolerance;

  if (layout.controls.size() != static_cast<std::size_t>(action.num_vars)) {
    throw std::invalid_argument("layout does not match the action's variable count");
  }

  std::uint64_t aux_mask = 0;
  for (std::size_t q : layout.auxiliaries) aux_mask |= std::uint64_t{1} << q;

  std::vector<std::uint64_t> legal;
  const std::uint64_t logical_size = std::uint64_t{1} << (action.num_vars + 1);
  for (std::uint64_t l = 0; l < logical_size; ++l) {
    if (action.legal(l)) legal.push_back(l);
  }

  auto check = [&](const StateVector& input, const StateVector& expected,
                   const std::string& what) {
    for (const Branch& b : apply(c, input)) {
      ++report.branches_checked;
      const double infidelity = std::max(0.0, 1.0 - std::abs(expected.dot(b.state)));
      double leakage = 0;
      for (Eigen::Index i = 0; i < b.state.size(); ++i) {
        if (static_cast<std::uint64_t>(i) & aux_mask) leakage += std::norm(b.state(i));
      }
      report.max_infidelity = std::max(report.max_infidelity, infidelity);
      const bool aux_ok = leakage <= options.tolerance;
      if (!aux_ok) report.ancillas_restored = false;
      if ((infidelity > options.tolerance || !aux_ok) && report.verdict == Verdict::Pass) {
        report.verdict = Verdict::Fail;
        std::ostringstream os;
        os << what << describe_branch(b.outcomes) << ": infidelity " << infidelity
           << ", auxiliary leakage " << leakage;
        report.counterexample = os.str();
      }
    }
  };

  const std::size_t m = c.qubit_count();
  for (std::uint64_t l : legal) {
    check(basis_state<double>(m, embed(l, layout)),
          basis_state<double>(m, embed(action.image(l), layout)),
          "basis input " + describe_input(l, action.num_vars));
    ++report.basis_inputs;
  }

  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (std::size_t r = 0; r < options.random_states; ++r) {
    StateVector input = StateVector::Zero(Eigen::Index{1} << m);
    StateVector expected = StateVector::Zero(Eigen::Index{1} << m);
    for (std::uint64_t l : legal) {
      const double re = normal(rng);
      const double im = normal(rng);
      const std::complex<double> alpha(re, im);
      input(static_cast<Eigen::Index>(embed(l, layout))) += alpha;
      expected(static_cast<Eigen::Index>(embed(action.image(l), layout))) += alpha;
    }
    const double norm = input.norm();
    input /= norm;
    expected /= norm;
    check(input, expected, "random superposition #" + std::to_string(r));
    ++report.random_inputs;
  }
  return report;
}

VerificationReport verify(const SynthesisResult& result, const TruthTable& f,
                          const VerifyOptions& options) {
  return verify_action(result.circuit, result.layout, oracle_unitary(f, oracle_mode(result.kind)),
                       options, std::string(construction_name(result.kind)), f.to_hex());
}

bool diagonal_decomposition_check(const TruthTable& f, double tol) {
  const int n = f.num_vars();
  if (n > 6) throw std::out_of_range("diagonal_decomposition_check requires n <= 6");
  const std::size_t m = static_cast<std::size_t>(n) + 1;
  const Eigen::Index size = Eigen::Index{1} << m;
  const std::uint64_t xmask = (std::uint64_t{1} << n) - 1;

  // g^ = (1, ..., 1, f^): g = x_{n+1} AND f.
  StateVector from_truth_table(size);
  for (Eigen::Index z = 0; z < size; ++z) {
    const bool y = (static_cast<std::uint64_t>(z) >> n) & 1U;
    from_truth_table(z) = (y && f.evaluate(static_cast<std::uint64_t>(z) & xmask)) ? -1.0 : 1.0;
  }

  // Phase polynomial: D|z> = prod_k exp(i pi s'_k / 2^{n+1} * p_k(z)).
  const IntVector lifted = lifted_spectrum(spectrum(f));
  StateVector from_phase_polynomial(size);
  for (Eigen::Index z = 0; z < size; ++z) {
    double phase = 0;
    for (Eigen::Index k = 0; k < size; ++k) {
      if (std::popcount(static_cast<std::uint64_t>(k & z)) & 1) {
        phase += PhaseAngle::from_fraction(lifted(k), n + 1).radians();
      }
    }
    from_phase_polynomial(z) = std::polar(1.0, phase);
  }
  if (!state_equal_up_to_phase(from_truth_table / std::sqrt(double(size)),
                               from_phase_polynomial / std::sqrt(double(size)), tol)) {
    return false;
  }

  const BasisAction oracle = oracle_unitary(f, OracleMode::General);
  const Gate h = Gate::h(static_cast<std::size_t>(n));
  for (const StateVector* diagonal : {&from_truth_table, &from_phase_polynomial}) {
    for (Eigen::Index z = 0; z < size; ++z) {
      StateVector psi = basis_state<double>(m, static_cast<std::uint64_t>(z));
      apply_gate(h, psi);
      psi = psi.cwiseProduct(*diagonal);
      apply_gate(h, psi);
      const StateVector expected =
          basis_state<double>(m, oracle.image(static_cast<std::uint64_t>(z)));
      if (!state_equal_up_to_phase(expected, psi, tol)) return false;
    }
  }
  return true;
}

}  // namespace fcnot
