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

#include "fcnot/circuit.hpp"
#include "fcnot/sim.hpp"
#include "fcnot/synth.hpp"

namespace fcnot {
namespace {

const TruthTable kAnd2(2, {false, false, false, true});

// Random measurement-free circuit over the full gate set.
Circuit random_circuit(std::size_t qubits, std::size_t gates, std::mt19937_64& rng) {
  Circuit c(qubits);
  std::uniform_int_distribution<std::size_t> qubit(0, qubits - 1);
  std::uniform_int_distribution<int> kind(0, 6);
  std::uniform_int_distribution<std::int64_t> numerator(-15, 15);
  std::uniform_int_distribution<int> exponent(0, 4);
  for (std::size_t i = 0; i < gates; ++i) {
    const std::size_t q = qubit(rng);
    switch (kind(rng)) {
      case 0: c.add(Gate::h(q)); break;
      case 1: c.add(Gate::s(q)); break;
      case 2: c.add(Gate::sdg(q)); break;
      case 3: c.add(Gate::x(q)); break;
      case 4: {
        if (qubits == 1) {
          c.add(Gate::h(q));
          break;
        }
        std::size_t t = qubit(rng);
        if (t == q) t = (q + 1) % qubits;
        c.add(Gate::cnot(q, t));
        break;
      }
      case 5: c.add(Gate::r1(PhaseAngle(numerator(rng), exponent(rng)), q)); break;
      default: c.add(Gate::r1dg(PhaseAngle(numerator(rng), exponent(rng)), q)); break;
    }
  }
  return c;
}

bool acts_as_identity(const Circuit& c) {
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << c.qubit_count()); ++i) {
    const StateVector in = basis_state<double>(c.qubit_count(), i);
    const BranchedState out = apply(c, in);
    if (out.size() != 1 || !state_equal_up_to_phase(in, out[0].state, 1e-9)) return false;
  }
  return true;
}

TEST_CASE("PhaseAngle is exact") {
  CHECK(PhaseAngle(2, 3) == PhaseAngle(1, 2));
  CHECK(PhaseAngle(0, 5) == PhaseAngle());
  CHECK(PhaseAngle(4, 2).is_clifford());
  CHECK(PhaseAngle(2, 2).is_clifford());
  CHECK_FALSE(PhaseAngle(1, 2).is_clifford());
  CHECK(PhaseAngle(1, 2) + PhaseAngle(1, 2) == PhaseAngle::half_pi());
  CHECK(PhaseAngle(1, 2) - PhaseAngle::half_pi() == PhaseAngle(-1, 2));
  CHECK(PhaseAngle(3, 3).doubled() == PhaseAngle(3, 2));
  CHECK(PhaseAngle(1, 0).doubled() == PhaseAngle(2, 0));
  CHECK(PhaseAngle(1, 2).to_expression() == "1*pi/4");
  CHECK(PhaseAngle(-3, 3).to_pretty() == "-3π/8");
  CHECK(PhaseAngle(1, 2).radians() == Catch::Approx(std::numbers::pi / 4));
}

TEST_CASE("Circuit rejects invalid gates") {
  Circuit c(2);
  CHECK_THROWS_AS(c.add(Gate::h(2)), std::out_of_range);
  CHECK_THROWS_AS(c.add(Gate::cnot(1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(c.add(Gate::cnot(0, 5)), std::out_of_range);
  CHECK_THROWS_AS(c.add(ConditionedBlock{3, {}}), std::out_of_range);
  CHECK_THROWS_AS(c.add(ConditionedBlock{0, {Gate::x(4)}}), std::out_of_range);
}

TEST_CASE("compose runs the left operand first") {
  Circuit a(2);
  a.add(Gate::h(0));
  Circuit b(2);
  b.add(Gate::cnot(0, 1));
  const Circuit ab = compose(a, b);
  REQUIRE(ab.elements().size() == 2);
  CHECK(std::get<Gate>(ab.elements()[0]) == Gate::h(0));
  CHECK(std::get<Gate>(ab.elements()[1]) == Gate::cnot(0, 1));

  CHECK(compose(Circuit(2), b) == b);
  CHECK(acts_as_identity(compose(a, a)));
  CHECK_THROWS_AS(compose(Circuit(2), Circuit(3)), std::invalid_argument);
}

TEST_CASE("adjoint examples") {
  Circuit s(1);
  s.add(Gate::s(0));
  CHECK(std::get<Gate>(adjoint(s).elements()[0]) == Gate::sdg(0));

  Circuit c(2);
  c.add(Gate::cnot(0, 1)).add(Gate::h(0));
  Circuit expected(2);
  expected.add(Gate::h(0)).add(Gate::cnot(0, 1));
  CHECK(adjoint(c) == expected);

  Circuit r(3);
  r.add(Gate::r1(PhaseAngle(1, 2), 2));
  CHECK(std::get<Gate>(adjoint(r).elements()[0]) == Gate::r1dg(PhaseAngle(1, 2), 2));

  Circuit measured(1);
  measured.add(ConditionedBlock{0, {Gate::x(0)}});
  CHECK_THROWS_AS(adjoint(measured), std::invalid_argument);
}

TEST_CASE("adjoint is an involution and inverts the unitary") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Circuit c = random_circuit(1 + trial % 4, 25, rng);
    CHECK(adjoint(adjoint(c)) == c);
    CHECK(acts_as_identity(compose(c, adjoint(c))));
  }
}

TEST_CASE("rotation_depth examples") {
  CHECK(rotation_depth(Circuit(3)) == 0);

  Circuit clifford(2);
  clifford.add(Gate::h(0)).add(Gate::cnot(0, 1)).add(Gate::r1(PhaseAngle::half_pi(), 1));
  CHECK(rotation_depth(clifford) == 0);

  Circuit serial(1);
  serial.add(Gate::r1(PhaseAngle(1, 3), 0)).add(Gate::r1(PhaseAngle(1, 3), 0));
  CHECK(rotation_depth(serial) == 2);

  Circuit parallel(2);
  parallel.add(Gate::r1(PhaseAngle(1, 3), 0)).add(Gate::r1(PhaseAngle(1, 3), 1));
  CHECK(rotation_depth(parallel) == 1);

  // Clifford gates take no stage, but still order rotations they connect.
  Circuit chained(2);
  chained.add(Gate::r1(PhaseAngle(1, 2), 0)).add(Gate::cnot(0, 1)).add(Gate::r1(PhaseAngle(1, 2), 1));
  CHECK(rotation_depth(chained) == 2);

  // A conditioned body starts after the measured qubit's rotations.
  Circuit conditioned(2);
  conditioned.add(Gate::r1(PhaseAngle(1, 2), 0));
  conditioned.add(ConditionedBlock{0, {Gate::r1(PhaseAngle(1, 2), 1)}});
  CHECK(rotation_depth(conditioned) == 2);

  CHECK(synth_general_depth1(kAnd2).rotation_depth == 1);
}

TEST_CASE("rotation_depth is zero iff there are no non-Clifford rotations") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Circuit c = random_circuit(3, 1 + trial % 8, rng);
    CHECK((rotation_depth(c) == 0) == (resource_counts(c).r1_non_clifford == 0));
  }
}

TEST_CASE("resource_counts examples") {
  const ResourceCounts c1 = synth_general_low_width(kAnd2).counts;
  CHECK(c1.cnot == 6);
  CHECK(c1.r1_total == 7);
  CHECK(c1.r1_non_clifford == 7);
  CHECK(c1.h == 2);
  CHECK(c1.s == 1);
  CHECK(c1.qubits == 3);
  CHECK(c1.auxiliary == 0);

  const ResourceCounts c5 = synth_anddg_low_width(kAnd2).counts;
  CHECK(c5.r1_non_clifford == 0);
  CHECK(c5.measurements == 1);
  CHECK(c5.x == 1);

  CHECK(resource_counts(Circuit()) == ResourceCounts{});
}

TEST_CASE("merge_s_gate folds S into the first target rotation") {
  const Circuit original = synth_general_low_width(kAnd2).circuit;
  const Circuit merged = merge_s_gate(original);
  CHECK(resource_counts(merged).s == resource_counts(original).s - 1);
  CHECK(resource_counts(merged).r1_total == resource_counts(original).r1_total);

  // S . R1dg(pi/4) = R1dg(pi/4 - pi/2).
  bool found = false;
  for (const auto& e : merged.elements()) {
    if (const Gate* g = std::get_if<Gate>(&e)) {
      if (*g == Gate::r1dg(PhaseAngle(-1, 2), 2)) found = true;
    }
  }
  CHECK(found);
  CHECK(merge_s_gate(merged) == merged);

  Circuit no_pattern(2);
  no_pattern.add(Gate::s(0)).add(Gate::h(0)).add(Gate::r1dg(PhaseAngle(1, 2), 0));
  CHECK(merge_s_gate(no_pattern) == no_pattern);
}

TEST_CASE("merge_s_gate preserves the simulated action") {
  // Compares outputs on every basis input whose auxiliaries are |0>.
  const auto same_action = [](const Circuit& a, const Circuit& b) {
    const Layout layout = layout_of(a);
    std::vector<std::size_t> wires = layout.controls;
    wires.push_back(layout.target);
    for (std::uint64_t l = 0; l < (std::uint64_t{1} << wires.size()); ++l) {
      std::uint64_t index = 0;
      for (std::size_t i = 0; i < wires.size(); ++i) {
        if ((l >> i) & 1U) index |= std::uint64_t{1} << wires[i];
      }
      const StateVector in = basis_state<double>(a.qubit_count(), index);
      const StateVector out_a = apply(a, in)[0].state;
      const StateVector out_b = apply(b, in)[0].state;
      if ((out_a - out_b).norm() > 1e-9) return false;
    }
    return true;
  };
  for (int n = 1; n <= 3; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (std::size_t{1} << n);
    for (std::uint64_t index = 0; index < count; index += (n == 3 ? 7 : 1)) {
      const TruthTable f = TruthTable::from_index(n, index);
      for (ConstructionKind kind : {ConstructionKind::GeneralLowWidth, ConstructionKind::GeneralDepth1,
                                    ConstructionKind::AndLowWidth, ConstructionKind::AndDepth1}) {
        const Circuit c = synthesize(kind, f).circuit;
        const Circuit merged = merge_s_gate(c);
        CHECK(merge_s_gate(merged) == merged);
        CHECK(same_action(c, merged));
      }
    }
  }
}

}  // namespace
}  // namespace fcnot
