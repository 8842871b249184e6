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

#include "fcnot/synth.hpp"

#include <algorithm>
#include <stdexcept>

namespace fcnot {

namespace {

struct KindInfo {
  ConstructionKind kind;
  std::string_view name;
  TargetContract contract;
  Direction direction;
};

constexpr std::array<KindInfo, 6> kKindInfo = {{
    {ConstructionKind::GeneralLowWidth, "general-lowwidth", TargetContract::Arbitrary, Direction::Compute},
    {ConstructionKind::GeneralDepth1, "general-depth1", TargetContract::Arbitrary, Direction::Compute},
    {ConstructionKind::AndLowWidth, "and-lowwidth", TargetContract::Zero, Direction::Compute},
    {ConstructionKind::AndDepth1, "and-depth1", TargetContract::Zero, Direction::Compute},
    {ConstructionKind::AndDgLowWidth, "anddg-lowwidth", TargetContract::FOfX, Direction::Uncompute},
    {ConstructionKind::AndDgDepth1, "anddg-depth1", TargetContract::FOfX, Direction::Uncompute},
}};

const KindInfo& info(ConstructionKind kind) {
  for (const auto& i : kKindInfo) {
    if (i.kind == kind) return i;
  }
  throw std::invalid_argument("unknown construction kind");
}

std::size_t pow2(int e) { return std::size_t{1} << e; }

int checked_num_vars(const AngleTable& theta) {
  const int n = theta.num_vars;
  if (n < 1) throw std::invalid_argument("constructions need at least one variable");
  if (theta.angles.size() != pow2(n)) throw std::invalid_argument("angle table length must be 2^n");
  return n;
}

// Gate sequence builder that drops zero-angle rotations.
class GateList {
 public:
  void add(const Gate& g) {
    if (g.is_rotation() && g.angle.is_zero()) return;
    gates_.push_back(g);
  }
  void add(const std::vector<Gate>& gates) {
    for (const Gate& g : gates) add(g);
  }
  const std::vector<Gate>& gates() const { return gates_; }
  std::vector<Gate> take() { return std::move(gates_); }

 private:
  std::vector<Gate> gates_;
};

// C_i: rotations on qubit i over every parity whose leading variable is
// x_{i+1}, walking the i-bit Gray code. Qubit i is restored at the end.
void emit_leading_parities(GateList& out, const AngleTable& theta, int i, bool doubled) {
  const GrayCode code = gray_code(i);
  const std::size_t q = static_cast<std::size_t>(i);
  for (std::size_t k = 0; k < code.codewords.size(); ++k) {
    const PhaseAngle& a = theta[pow2(i) + code.codewords[k]];
    out.add(Gate::r1(doubled ? a.doubled() : a, q));
    if (code.deltas[k] >= 0) out.add(Gate::cnot(static_cast<std::size_t>(code.deltas[k]), q));
  }
}

// C: adjoint rotations on the target over y ^ every parity of x.
void emit_target_parities(GateList& out, const AngleTable& theta, int n) {
  const GrayCode code = gray_code(n);
  const std::size_t target = static_cast<std::size_t>(n);
  for (std::size_t k = 0; k < code.codewords.size(); ++k) {
    out.add(Gate::r1dg(theta[code.codewords[k]], target));
    out.add(Gate::cnot(static_cast<std::size_t>(code.deltas[k]), target));
  }
}

// C_1 and C_2 of the depth-1 constructions over 3 <= k < limit with mu(k) != 1.
// `qubit` maps a parity index to its circuit qubit.
template <typename QubitOf>
std::vector<Gate> trailing_copies(std::size_t limit, QubitOf qubit) {
  std::vector<Gate> gates;
  for (std::size_t k = 3; k < limit; ++k) {
    if (mu(k) == 1) continue;
    gates.push_back(Gate::cnot(qubit(trailing_bit(k)), qubit(k)));
  }
  return gates;
}

template <typename QubitOf>
std::vector<Gate> remainder_copies(std::size_t limit, QubitOf qubit) {
  std::vector<Gate> gates;
  for (std::size_t k = 3; k < limit; ++k) {
    if (mu(k) == 1) continue;
    gates.push_back(Gate::cnot(qubit(k - trailing_bit(k)), qubit(k)));
  }
  return gates;
}

Circuit make_circuit(std::size_t qubits, const std::vector<std::size_t>& controls,
                     std::size_t target) {
  Circuit c(qubits);
  for (std::size_t i = 0; i < controls.size(); ++i) {
    c.set_role(controls[i], QubitRole::control(static_cast<int>(i) + 1));
  }
  c.set_role(target, QubitRole::target());
  return c;
}

SynthesisResult finish(ConstructionKind kind, Circuit circuit) {
  SynthesisResult result{kind, std::move(circuit), {}, {}, 0, 0};
  refresh_metrics(result);
  return result;
}

std::vector<std::size_t> sequential_controls(int n) {
  std::vector<std::size_t> controls(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) controls[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
  return controls;
}

std::vector<std::size_t> power_of_two_controls(int n, std::size_t shift) {
  std::vector<std::size_t> controls(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) controls[static_cast<std::size_t>(i)] = pow2(i) - shift;
  return controls;
}

}  // namespace

TargetContract target_contract(ConstructionKind kind) { return info(kind).contract; }
Direction direction(ConstructionKind kind) { return info(kind).direction; }
std::string_view construction_name(ConstructionKind kind) { return info(kind).name; }

std::optional<ConstructionKind> construction_from_name(std::string_view name) {
  for (const auto& i : kKindInfo) {
    if (i.name == name) return i.kind;
  }
  return std::nullopt;
}

std::size_t expected_ancillas(ConstructionKind kind, int n) {
  const std::size_t un = static_cast<std::size_t>(n);
  switch (kind) {
    case ConstructionKind::GeneralLowWidth:
    case ConstructionKind::AndLowWidth:
    case ConstructionKind::AndDgLowWidth:
      return 0;
    case ConstructionKind::GeneralDepth1:
      return pow2(n + 1) - un - 2;
    case ConstructionKind::AndDepth1:
    case ConstructionKind::AndDgDepth1:
      return pow2(n) - un - 1;
  }
  return 0;
}

std::size_t expected_qubits(ConstructionKind kind, int n) {
  return static_cast<std::size_t>(n) + 1 + expected_ancillas(kind, n);
}

Layout layout_of(const Circuit& c) {
  Layout layout;
  std::vector<std::pair<int, std::size_t>> controls;
  bool has_target = false;
  for (std::size_t q = 0; q < c.qubit_count(); ++q) {
    const QubitRole& role = c.roles()[q];
    switch (role.kind) {
      case RoleKind::Control: controls.emplace_back(role.variable, q); break;
      case RoleKind::Target:
        layout.target = q;
        has_target = true;
        break;
      case RoleKind::Auxiliary: layout.auxiliaries.push_back(q); break;
    }
  }
  if (!has_target) throw std::invalid_argument("circuit has no target qubit");
  std::sort(controls.begin(), controls.end());
  for (const auto& [variable, q] : controls) layout.controls.push_back(q);
  return layout;
}

void refresh_metrics(SynthesisResult& result) {
  result.layout = layout_of(result.circuit);
  result.counts = resource_counts(result.circuit);
  result.rotation_depth = rotation_depth(result.circuit);
  result.ancilla_count = result.layout.auxiliaries.size();
}

SynthesisResult synth_general_low_width(const AngleTable& theta) {
  const int n = checked_num_vars(theta);
  const std::size_t target = static_cast<std::size_t>(n);
  GateList g;
  g.add(Gate::h(target));
  g.add(Gate::s(target));
  for (int i = 0; i < n; ++i) emit_leading_parities(g, theta, i, false);
  emit_target_parities(g, theta, n);
  g.add(Gate::h(target));

  Circuit c = make_circuit(target + 1, sequential_controls(n), target);
  c.append(g.gates());
  return finish(ConstructionKind::GeneralLowWidth, std::move(c));
}

SynthesisResult synth_general_depth1(const AngleTable& theta) {
  const int n = checked_num_vars(theta);
  // Parity k = (b_{n+1} ... b_1) lives on circuit qubit k - 1.
  const auto qubit = [](std::size_t k) { return k - 1; };
  const std::size_t half = pow2(n);
  const std::size_t target = qubit(half);

  const std::vector<Gate> c1 = trailing_copies(2 * half, qubit);
  const std::vector<Gate> c2 = remainder_copies(2 * half, qubit);

  GateList g;
  g.add(Gate::h(target));
  g.add(Gate::s(target));
  g.add(c1);
  g.add(c2);
  for (std::size_t k = 1; k < half; ++k) g.add(Gate::r1(theta[k], qubit(k)));
  for (std::size_t k = 0; k < half; ++k) g.add(Gate::r1dg(theta[k], qubit(half + k)));
  g.add(adjoint(c2));
  g.add(adjoint(c1));
  g.add(Gate::h(target));

  Circuit c = make_circuit(2 * half - 1, power_of_two_controls(n, 1), target);
  c.append(g.gates());
  return finish(ConstructionKind::GeneralDepth1, std::move(c));
}

SynthesisResult synth_and_low_width(const AngleTable& theta) {
  const int n = checked_num_vars(theta);
  const std::size_t target = static_cast<std::size_t>(n);
  GateList g;
  g.add(Gate::h(target));
  g.add(Gate::s(target));
  emit_target_parities(g, theta, n);
  g.add(Gate::h(target));
  // Without this the output carries the relative phase i^{-(f(x) - f(0))}.
  g.add(Gate::s(target));

  Circuit c = make_circuit(target + 1, sequential_controls(n), target);
  c.append(g.gates());
  return finish(ConstructionKind::AndLowWidth, std::move(c));
}

SynthesisResult synth_and_depth1(const AngleTable& theta) {
  const int n = checked_num_vars(theta);
  const auto qubit = [](std::size_t k) { return k; };
  const std::size_t size = pow2(n);
  const std::size_t target = 0;

  const std::vector<Gate> c1 = trailing_copies(size, qubit);
  const std::vector<Gate> c2 = remainder_copies(size, qubit);
  std::vector<Gate> c3;
  for (int i = 0; i < n; ++i) c3.push_back(Gate::cnot(target, pow2(i)));

  GateList g;
  g.add(Gate::h(target));
  g.add(Gate::s(target));
  g.add(c1);
  g.add(c3);
  g.add(c2);
  for (std::size_t k = 0; k < size; ++k) g.add(Gate::r1dg(theta[k], k));
  g.add(adjoint(c2));
  g.add(adjoint(c3));
  g.add(adjoint(c1));
  g.add(Gate::h(target));
  // Same relative-phase correction as the low-width variant.
  g.add(Gate::s(target));

  Circuit c = make_circuit(size, power_of_two_controls(n, 0), target);
  c.append(g.gates());
  return finish(ConstructionKind::AndDepth1, std::move(c));
}

SynthesisResult synth_anddg_low_width(const AngleTable& theta) {
  const int n = checked_num_vars(theta);
  const std::size_t target = static_cast<std::size_t>(n);
  GateList body;
  for (int i = 0; i < n; ++i) emit_leading_parities(body, theta, i, true);
  body.add(Gate::x(target));

  Circuit c = make_circuit(target + 1, sequential_controls(n), target);
  c.add(Gate::h(target));
  c.add(ConditionedBlock{target, body.take()});
  return finish(ConstructionKind::AndDgLowWidth, std::move(c));
}

SynthesisResult synth_anddg_depth1(const AngleTable& theta) {
  const int n = checked_num_vars(theta);
  const auto qubit = [](std::size_t k) { return k; };
  const std::size_t size = pow2(n);
  const std::size_t target = 0;

  const std::vector<Gate> c1 = trailing_copies(size, qubit);
  const std::vector<Gate> c2 = remainder_copies(size, qubit);

  GateList body;
  body.add(c1);
  body.add(c2);
  for (std::size_t k = 1; k < size; ++k) body.add(Gate::r1(theta[k].doubled(), k));
  body.add(adjoint(c2));
  body.add(adjoint(c1));
  body.add(Gate::x(target));

  Circuit c = make_circuit(size, power_of_two_controls(n, 0), target);
  c.add(Gate::h(target));
  c.add(ConditionedBlock{target, body.take()});
  return finish(ConstructionKind::AndDgDepth1, std::move(c));
}

SynthesisResult synthesize(ConstructionKind kind, const AngleTable& theta) {
  switch (kind) {
    case ConstructionKind::GeneralLowWidth: return synth_general_low_width(theta);
    case ConstructionKind::GeneralDepth1: return synth_general_depth1(theta);
    case ConstructionKind::AndLowWidth: return synth_and_low_width(theta);
    case ConstructionKind::AndDepth1: return synth_and_depth1(theta);
    case ConstructionKind::AndDgLowWidth: return synth_anddg_low_width(theta);
    case ConstructionKind::AndDgDepth1: return synth_anddg_depth1(theta);
  }
  throw std::invalid_argument("unknown construction kind");
}

SynthesisResult synthesize(ConstructionKind kind, const TruthTable& f) {
  return synthesize(kind, angles(spectrum(f)));
}

}  // namespace fcnot
