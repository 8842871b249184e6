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

#include <catch_amalgamated.hpp>

#include <random>

#include "fcnot/sim.hpp"
#include "fcnot/synth.hpp"

namespace fcnot {
namespace {

const TruthTable kAnd2(2, {false, false, false, true});

std::vector<Gate> top_level_gates(const Circuit& c) {
  std::vector<Gate> gates;
  for (const auto& e : c.elements()) gates.push_back(std::get<Gate>(e));
  return gates;
}

std::vector<Gate> cnots(const std::vector<Gate>& gates) {
  std::vector<Gate> out;
  for (const Gate& g : gates) {
    if (g.kind == GateKind::CNOT) out.push_back(g);
  }
  return out;
}

std::size_t nonzero(const IntVector& s, std::size_t first, std::size_t last) {
  std::size_t count = 0;
  for (std::size_t j = first; j < last; ++j) count += s(static_cast<Eigen::Index>(j)) != 0;
  return count;
}

// Output of the circuit restricted to the logical wires, for an input given
// over logical indices x | (y << n) with auxiliaries at |0>. One entry per
// measurement branch.
std::vector<Eigen::VectorXcd> logical_outputs(const SynthesisResult& r, const Eigen::VectorXcd& in) {
  const std::size_t wires = r.layout.controls.size() + 1;
  auto embed = [&](std::uint64_t l) {
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < r.layout.controls.size(); ++i) {
      if ((l >> i) & 1U) index |= std::uint64_t{1} << r.layout.controls[i];
    }
    if ((l >> r.layout.controls.size()) & 1U) index |= std::uint64_t{1} << r.layout.target;
    return static_cast<Eigen::Index>(index);
  };
  StateVector psi = StateVector::Zero(Eigen::Index{1} << r.circuit.qubit_count());
  for (Eigen::Index l = 0; l < in.size(); ++l) psi(embed(static_cast<std::uint64_t>(l))) = in(l);
  std::vector<Eigen::VectorXcd> outs;
  for (const Branch& b : fcnot::apply(r.circuit, psi)) {
    Eigen::VectorXcd out(Eigen::Index{1} << wires);
    for (Eigen::Index l = 0; l < out.size(); ++l) out(l) = b.state(embed(static_cast<std::uint64_t>(l)));
    outs.push_back(out);
  }
  return outs;
}

Eigen::VectorXcd random_logical(std::size_t wires, std::mt19937_64& rng,
                                const std::function<bool(std::uint64_t)>& legal) {
  std::normal_distribution<double> normal;
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << wires);
  for (Eigen::Index l = 0; l < v.size(); ++l) {
    if (legal(static_cast<std::uint64_t>(l))) v(l) = {normal(rng), normal(rng)};
  }
  return v.normalized();
}

TEST_CASE("construction names and contracts") {
  for (ConstructionKind kind : kAllConstructions) {
    CHECK(construction_from_name(construction_name(kind)) == kind);
  }
  CHECK_FALSE(construction_from_name("general").has_value());
  CHECK(target_contract(ConstructionKind::GeneralDepth1) == TargetContract::Arbitrary);
  CHECK(target_contract(ConstructionKind::AndLowWidth) == TargetContract::Zero);
  CHECK(target_contract(ConstructionKind::AndDgDepth1) == TargetContract::FOfX);
  CHECK(direction(ConstructionKind::AndDgLowWidth) == Direction::Uncompute);
  CHECK(direction(ConstructionKind::AndDepth1) == Direction::Compute);
}

TEST_CASE("constructions reject zero variables") {
  const AngleTable empty{0, {PhaseAngle()}};
  for (ConstructionKind kind : kAllConstructions) {
    CHECK_THROWS_AS(synthesize(kind, empty), std::invalid_argument);
  }
}

TEST_CASE("general low-width circuit for AND2") {
  const SynthesisResult r = synth_general_low_width(kAnd2);
  const PhaseAngle t(1, 2);
  // H S | C_0 | C_1 | C | H with theta = (t, t, t, -t).
  const std::vector<Gate> expected = {
      Gate::h(2),        Gate::s(2),
      Gate::r1(t, 0),
      Gate::r1(t, 1),    Gate::cnot(0, 1), Gate::r1(-t, 1), Gate::cnot(0, 1),
      Gate::r1dg(t, 2),  Gate::cnot(0, 2), Gate::r1dg(t, 2), Gate::cnot(1, 2),
      Gate::r1dg(-t, 2), Gate::cnot(0, 2), Gate::r1dg(t, 2), Gate::cnot(1, 2),
      Gate::h(2)};
  CHECK(top_level_gates(r.circuit) == expected);
  CHECK(r.counts.qubits == 3);
  CHECK(r.counts.r1_total == 7);
  CHECK(r.counts.cnot == 6);
  CHECK(r.ancilla_count == 0);
  CHECK(r.layout.controls == std::vector<std::size_t>{0, 1});
  CHECK(r.layout.target == 2);
}

TEST_CASE("general low-width for f = x1 is a CNOT") {
  const SynthesisResult r = synth_general_low_width(TruthTable(1, {false, true}));
  for (std::uint64_t i = 0; i < 4; ++i) {
    const std::uint64_t expected = (i & 1U) ? i ^ 2U : i;
    const BranchedState out = fcnot::apply(r.circuit, basis_state<double>(2, i));
    CHECK(state_equal_up_to_phase(out[0].state, basis_state<double>(2, expected), 1e-12));
  }
}

TEST_CASE("general depth-1 circuit for AND2") {
  const SynthesisResult r = synth_general_depth1(kAnd2);
  CHECK(r.counts.qubits == 7);
  CHECK(r.ancilla_count == 4);
  CHECK(r.rotation_depth == 1);
  CHECK(r.counts.r1_total == 7);
  CHECK(r.counts.cnot == 16);
  // Parity k sits on qubit k - 1: x1 -> 0, x2 -> 1, y -> 3.
  CHECK(r.layout.controls == std::vector<std::size_t>{0, 1});
  CHECK(r.layout.target == 3);
  // C_1 then C_2 over k in {3, 5, 6, 7}.
  const std::vector<Gate> all = cnots(top_level_gates(r.circuit));
  const std::vector<Gate> forward(all.begin(), all.begin() + 8);
  const std::vector<Gate> expected = {
      Gate::cnot(0, 2), Gate::cnot(0, 4), Gate::cnot(1, 5), Gate::cnot(0, 6),
      Gate::cnot(1, 2), Gate::cnot(3, 4), Gate::cnot(3, 5), Gate::cnot(5, 6)};
  CHECK(forward == expected);

  const SynthesisResult one = synth_general_depth1(TruthTable(1, {false, true}));
  CHECK(one.counts.qubits == 3);
  CHECK(one.ancilla_count == 1);
  CHECK(verify(one, TruthTable(1, {false, true})).passed());
}

TEST_CASE("AND low-width circuit for AND2") {
  const SynthesisResult r = synth_and_low_width(kAnd2);
  CHECK(r.counts.qubits == 3);
  CHECK(r.counts.r1_total == 4);
  CHECK(r.counts.cnot == 4);
  CHECK(r.ancilla_count == 0);
  // Constant 0 acts as identity on |x>|0>.
  CHECK(verify_action(synth_and_low_width(TruthTable(2)).circuit, r.layout,
                      identity_action(TruthTable(2), OracleMode::TargetZero), {})
            .passed());
}

TEST_CASE("AND depth-1 circuit for AND2") {
  const SynthesisResult r = synth_and_depth1(kAnd2);
  CHECK(r.counts.qubits == 4);
  CHECK(r.ancilla_count == 1);
  CHECK(r.rotation_depth == 1);
  CHECK(r.counts.r1_total == 4);
  const std::vector<Gate> all = cnots(top_level_gates(r.circuit));
  REQUIRE(all.size() == 8);
  // C_1, C_3, C_2 then the reverse.
  const std::vector<Gate> expected = {Gate::cnot(1, 3), Gate::cnot(0, 1), Gate::cnot(0, 2),
                                      Gate::cnot(2, 3)};
  CHECK(std::vector<Gate>(all.begin(), all.begin() + 4) == expected);
  CHECK(std::vector<Gate>(all.begin() + 4, all.end()) == adjoint(expected));

  const SynthesisResult one = synth_and_depth1(TruthTable(1, {false, true}));
  CHECK(one.counts.qubits == 2);
  CHECK(one.ancilla_count == 0);
}

TEST_CASE("AND-dagger low-width circuit for AND2") {
  const SynthesisResult r = synth_anddg_low_width(kAnd2);
  REQUIRE(r.circuit.elements().size() == 2);
  CHECK(std::get<Gate>(r.circuit.elements()[0]) == Gate::h(2));
  const auto& block = std::get<ConditionedBlock>(r.circuit.elements()[1]);
  CHECK(block.measured_qubit == 2);
  const PhaseAngle half = PhaseAngle::half_pi();
  const std::vector<Gate> expected = {Gate::r1(half, 0), Gate::r1(half, 1), Gate::cnot(0, 1),
                                      Gate::r1(-half, 1), Gate::cnot(0, 1), Gate::x(2)};
  CHECK(block.body == expected);
  CHECK(r.counts.r1_non_clifford == 0);
}

TEST_CASE("AND-dagger depth-1 circuit for AND2") {
  const SynthesisResult r = synth_anddg_depth1(kAnd2);
  CHECK(r.counts.qubits == 4);
  CHECK(r.ancilla_count == 1);
  CHECK(r.counts.r1_total == 3);
  CHECK(r.counts.measurements == 1);

  const SynthesisResult one = synth_anddg_depth1(TruthTable(1, {false, true}));
  CHECK(one.ancilla_count == 0);
  CHECK(one.counts.r1_total == 1);
}

TEST_CASE("ancilla counts follow the closed forms") {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 6; ++n) {
    const TruthTable f = TruthTable::random(n, rng);
    for (ConstructionKind kind : kAllConstructions) {
      const SynthesisResult r = synthesize(kind, f);
      CHECK(r.ancilla_count == expected_ancillas(kind, n));
      CHECK(r.counts.qubits == expected_qubits(kind, n));
    }
  }
  const std::size_t n = 4;
  CHECK(expected_ancillas(ConstructionKind::GeneralDepth1, 4) == (std::size_t{1} << (n + 1)) - n - 2);
  CHECK(expected_ancillas(ConstructionKind::AndDepth1, 4) == (std::size_t{1} << n) - n - 1);
}

TEST_CASE("gate counts follow the closed forms") {
  std::mt19937_64 rng(23);
  for (int n = 1; n <= 7; ++n) {
    const std::size_t size = std::size_t{1} << n;
    for (int trial = 0; trial < 10; ++trial) {
      const TruthTable f = TruthTable::random(n, rng);
      const IntVector s = spectrum(f).coefficients;
      const std::size_t all = nonzero(s, 0, size);
      const std::size_t odd_parity = nonzero(s, 1, size);

      const SynthesisResult c1 = synth_general_low_width(f);
      CHECK(c1.counts.cnot == 2 * size - 2);
      CHECK(c1.counts.r1_total == all + odd_parity);
      const SynthesisResult c3 = synth_and_low_width(f);
      CHECK(c3.counts.cnot == size);
      CHECK(c3.counts.r1_total == all);
      CHECK(synth_general_depth1(f).counts.r1_total == all + odd_parity);
      CHECK(synth_and_depth1(f).counts.r1_total == all);
      CHECK(synth_anddg_low_width(f).counts.r1_total == odd_parity);
      CHECK(synth_anddg_depth1(f).counts.r1_total == odd_parity);
    }
  }
  // Odd-weight functions have no zero coefficient and hit the worst case.
  const TruthTable and3 = parse_function("x1 & x2 & x3");
  CHECK(synth_general_low_width(and3).counts.r1_total == 15);
  CHECK(synth_general_low_width(and3).counts.cnot == 14);
  CHECK(synth_and_low_width(and3).counts.r1_total == 8);
  CHECK(synth_and_low_width(and3).counts.cnot == 8);
  const TruthTable majority = parse_function("x1 & x2 | x1 & x3 | x2 & x3");
  CHECK(synth_general_low_width(majority).counts.r1_total == 8);
}

TEST_CASE("depth-1 constructions have rotation depth at most one") {
  std::mt19937_64 rng(29);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      const TruthTable f = TruthTable::random(n, rng);
      for (ConstructionKind kind : {ConstructionKind::GeneralDepth1, ConstructionKind::AndDepth1,
                                    ConstructionKind::AndDgDepth1}) {
        const SynthesisResult r = synthesize(kind, f);
        CHECK(r.rotation_depth <= 1);
        CHECK((r.rotation_depth == 1) == (r.counts.r1_non_clifford > 0));
      }
      // Depth is 1 exactly when a coefficient is not a multiple of 2^n.
      const IntVector s = spectrum(f).coefficients;
      const bool any_non_clifford = (s.unaryExpr([n](std::int64_t v) { return v % (std::int64_t{1} << n); }).array() != 0).any();
      CHECK((synth_and_depth1(f).rotation_depth == 1) == any_non_clifford);
    }
  }
}

TEST_CASE("general low-width circuit is self-inverse") {
  for (int n = 1; n <= 3; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (std::size_t{1} << n);
    for (std::uint64_t index = 0; index < count; ++index) {
      const TruthTable f = TruthTable::from_index(n, index);
      const SynthesisResult r = synth_general_low_width(f);
      const Circuit twice = compose(r.circuit, r.circuit);
      for (std::uint64_t i = 0; i < (std::uint64_t{1} << (n + 1)); ++i) {
        const StateVector in = basis_state<double>(static_cast<std::size_t>(n) + 1, i);
        CHECK(state_equal_up_to_phase(fcnot::apply(twice, in)[0].state, in, 1e-9));
      }
    }
  }
}

TEST_CASE("low-width and depth-1 variants agree") {
  std::mt19937_64 rng(31);
  const auto any = [](std::uint64_t) { return true; };
  for (int n = 1; n <= 3; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (std::size_t{1} << n);
    for (std::uint64_t index = 0; index < count; ++index) {
      const TruthTable f = TruthTable::from_index(n, index);
      const std::size_t wires = static_cast<std::size_t>(n) + 1;
      const std::uint64_t ybit = std::uint64_t{1} << n;
      const std::uint64_t xmask = ybit - 1;

      const Eigen::VectorXcd general_in = random_logical(wires, rng, any);
      const auto a = logical_outputs(synth_general_low_width(f), general_in);
      const auto b = logical_outputs(synth_general_depth1(f), general_in);
      CHECK(state_equal_up_to_phase(a[0], b[0], 1e-9));

      const Eigen::VectorXcd zero_in =
          random_logical(wires, rng, [ybit](std::uint64_t l) { return (l & ybit) == 0; });
      const auto c = logical_outputs(synth_and_low_width(f), zero_in);
      const auto d = logical_outputs(synth_and_depth1(f), zero_in);
      CHECK(state_equal_up_to_phase(c[0], d[0], 1e-9));

      const Eigen::VectorXcd fx_in = random_logical(wires, rng, [&](std::uint64_t l) {
        return ((l & ybit) != 0) == f.evaluate(l & xmask);
      });
      const auto e = logical_outputs(synth_anddg_low_width(f), fx_in);
      const auto g = logical_outputs(synth_anddg_depth1(f), fx_in);
      REQUIRE(e.size() == g.size());
      for (std::size_t i = 0; i < e.size(); ++i) CHECK(state_equal_up_to_phase(e[i], g[i], 1e-9));
    }
  }
}

TEST_CASE("AND constructions need the trailing phase correction") {
  // Without the final S the target-|0> circuits leave a relative phase of
  // -i on inputs where f(x) != f(0), which only superpositions expose.
  const auto strip_last = [](const SynthesisResult& r) {
    Circuit c(r.circuit.qubit_count());
    for (std::size_t q = 0; q < c.qubit_count(); ++q) c.set_role(q, r.circuit.roles()[q]);
    const auto& elements = r.circuit.elements();
    REQUIRE(std::get<Gate>(elements.back()).kind == GateKind::S);
    for (std::size_t i = 0; i + 1 < elements.size(); ++i) c.add(std::get<Gate>(elements[i]));
    return c;
  };
  const BasisAction oracle = oracle_unitary(kAnd2, OracleMode::TargetZero);
  for (const SynthesisResult& r : {synth_and_low_width(kAnd2), synth_and_depth1(kAnd2)}) {
    CHECK(verify(r, kAnd2).passed());
    const Circuit literal = strip_last(r);
    CHECK(verify_action(literal, r.layout, oracle, {0, 1, 1e-9}).passed());  // basis only
    const VerificationReport report = verify_action(literal, r.layout, oracle, {});
    CHECK(report.verdict == Verdict::Fail);
    CHECK(report.counterexample.find("random superposition") != std::string::npos);
  }
}

}  // namespace
}  // namespace fcnot
