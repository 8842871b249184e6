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

#include "fcnot/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace fcnot {

bool Gate::diagonal_on(std::size_t q) const {
  switch (kind) {
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::R1:
    case GateKind::R1dg:
      return true;
    case GateKind::CNOT:
      return target != q;
    case GateKind::H:
    case GateKind::X:
      return target != q;
  }
  return false;
}

Gate Gate::adjoint() const {
  Gate g = *this;
  switch (kind) {
    case GateKind::S: g.kind = GateKind::Sdg; break;
    case GateKind::Sdg: g.kind = GateKind::S; break;
    case GateKind::R1: g.kind = GateKind::R1dg; break;
    case GateKind::R1dg: g.kind = GateKind::R1; break;
    default: break;
  }
  return g;
}

std::string QubitRole::label() const {
  switch (kind) {
    case RoleKind::Control: return "x" + std::to_string(variable);
    case RoleKind::Target: return "y";
    case RoleKind::Auxiliary: return "a";
  }
  return "?";
}

Circuit::Circuit(std::size_t qubit_count)
    : qubit_count_(qubit_count), roles_(qubit_count, QubitRole::auxiliary()) {}

bool Circuit::has_measurement() const {
  return std::any_of(elements_.begin(), elements_.end(), [](const CircuitElement& e) {
    return std::holds_alternative<ConditionedBlock>(e);
  });
}

void Circuit::set_role(std::size_t q, QubitRole role) { roles_.at(q) = role; }

void Circuit::check_gate(const Gate& g) const {
  if (g.target >= qubit_count_) throw std::out_of_range("gate qubit index out of range");
  if (g.kind == GateKind::CNOT) {
    if (g.control >= qubit_count_) throw std::out_of_range("CNOT control out of range");
    if (g.control == g.target) throw std::invalid_argument("CNOT control equals target");
  }
}

Circuit& Circuit::add(const Gate& g) {
  check_gate(g);
  elements_.emplace_back(g);
  return *this;
}

Circuit& Circuit::add(ConditionedBlock block) {
  if (block.measured_qubit >= qubit_count_) {
    throw std::out_of_range("measured qubit out of range");
  }
  for (const Gate& g : block.body) check_gate(g);
  elements_.emplace_back(std::move(block));
  return *this;
}

Circuit& Circuit::append(const std::vector<Gate>& gates) {
  for (const Gate& g : gates) add(g);
  return *this;
}

Circuit compose(const Circuit& a, const Circuit& b) {
  if (a.qubit_count() != b.qubit_count()) {
    throw std::invalid_argument("compose: qubit counts differ");
  }
  Circuit out = a;
  for (const CircuitElement& e : b.elements()) {
    std::visit([&out](const auto& item) { out.add(item); }, e);
  }
  return out;
}

std::vector<Gate> adjoint(const std::vector<Gate>& gates) {
  std::vector<Gate> out;
  out.reserve(gates.size());
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) out.push_back(it->adjoint());
  return out;
}

Circuit adjoint(const Circuit& c) {
  Circuit out(c.qubit_count());
  for (std::size_t q = 0; q < c.qubit_count(); ++q) out.set_role(q, c.roles()[q]);
  const auto& elements = c.elements();
  for (auto it = elements.rbegin(); it != elements.rend(); ++it) {
    const Gate* g = std::get_if<Gate>(&*it);
    if (g == nullptr) throw std::invalid_argument("adjoint: circuit contains a measurement");
    out.add(g->adjoint());
  }
  return out;
}

namespace {

void schedule_gate(const Gate& g, std::vector<std::size_t>& stage) {
  std::size_t s = stage[g.target];
  if (g.kind == GateKind::CNOT) s = std::max(s, stage[g.control]);
  if (g.is_non_clifford()) ++s;
  stage[g.target] = s;
  if (g.kind == GateKind::CNOT) stage[g.control] = s;
}

}  // namespace

std::size_t rotation_depth(const Circuit& c) {
  // stage[q]: stages needed before anything may follow on qubit q.
  std::vector<std::size_t> stage(c.qubit_count(), 0);
  for (const CircuitElement& e : c.elements()) {
    if (const Gate* g = std::get_if<Gate>(&e)) {
      schedule_gate(*g, stage);
      continue;
    }
    const auto& block = std::get<ConditionedBlock>(e);
    const std::size_t barrier = stage[block.measured_qubit];
    for (const Gate& g : block.body) {
      stage[g.target] = std::max(stage[g.target], barrier);
      if (g.kind == GateKind::CNOT) stage[g.control] = std::max(stage[g.control], barrier);
    }
    for (const Gate& g : block.body) schedule_gate(g, stage);
  }
  return stage.empty() ? 0 : *std::max_element(stage.begin(), stage.end());
}

ResourceCounts resource_counts(const Circuit& c) {
  ResourceCounts counts;
  counts.qubits = c.qubit_count();
  counts.auxiliary = static_cast<std::size_t>(
      std::count_if(c.roles().begin(), c.roles().end(),
                    [](const QubitRole& r) { return r.kind == RoleKind::Auxiliary; }));
  auto tally = [&counts](const Gate& g) {
    switch (g.kind) {
      case GateKind::H: ++counts.h; break;
      case GateKind::S:
      case GateKind::Sdg: ++counts.s; break;
      case GateKind::X: ++counts.x; break;
      case GateKind::CNOT: ++counts.cnot; break;
      case GateKind::R1:
      case GateKind::R1dg:
        ++counts.r1_total;
        if (g.is_non_clifford()) ++counts.r1_non_clifford;
        break;
    }
  };
  for (const CircuitElement& e : c.elements()) {
    if (const Gate* g = std::get_if<Gate>(&e)) {
      tally(*g);
    } else {
      const auto& block = std::get<ConditionedBlock>(e);
      ++counts.measurements;
      for (const Gate& b : block.body) tally(b);
    }
  }
  return counts;
}

namespace {

// Index of the R1dg that the S gate at `pos` can fold into, if any. Only
// top-level gates are considered; a measurement touching q stops the scan.
std::optional<std::size_t> merge_partner(const std::vector<CircuitElement>& elements,
                                         std::size_t pos, std::size_t q) {
  for (std::size_t i = pos + 1; i < elements.size(); ++i) {
    const Gate* g = std::get_if<Gate>(&elements[i]);
    if (g == nullptr) {
      const auto& block = std::get<ConditionedBlock>(elements[i]);
      const bool touches = block.measured_qubit == q ||
                           std::any_of(block.body.begin(), block.body.end(),
                                       [q](const Gate& b) { return b.acts_on(q); });
      if (touches) return std::nullopt;
      continue;
    }
    if (g->kind == GateKind::R1dg && g->target == q) return i;
    if (!g->diagonal_on(q)) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

Circuit merge_s_gate(const Circuit& c) {
  std::vector<CircuitElement> elements = c.elements();
  std::vector<bool> removed(elements.size(), false);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const Gate* g = std::get_if<Gate>(&elements[i]);
    if (g == nullptr || g->kind != GateKind::S) continue;
    const auto partner = merge_partner(elements, i, g->target);
    if (!partner) continue;
    Gate& rotation = std::get<Gate>(elements[*partner]);
    rotation.angle = rotation.angle - PhaseAngle::half_pi();
    removed[i] = true;
  }
  Circuit out(c.qubit_count());
  for (std::size_t q = 0; q < c.qubit_count(); ++q) out.set_role(q, c.roles()[q]);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (removed[i]) continue;
    std::visit([&out](const auto& item) { out.add(item); }, elements[i]);
  }
  return out;
}

}  // namespace fcnot
