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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fcnot/angle.hpp"

namespace fcnot {

enum class GateKind { H, S, Sdg, X, CNOT, R1, R1dg };

struct Gate {
  GateKind kind = GateKind::H;
  std::size_t target = 0;
  std::size_t control = 0;  // CNOT only
  PhaseAngle angle;         // R1 / R1dg only

  static Gate h(std::size_t q) { return {GateKind::H, q, 0, {}}; }
  static Gate s(std::size_t q) { return {GateKind::S, q, 0, {}}; }
  static Gate sdg(std::size_t q) { return {GateKind::Sdg, q, 0, {}}; }
  static Gate x(std::size_t q) { return {GateKind::X, q, 0, {}}; }
  static Gate cnot(std::size_t control, std::size_t target) {
    return {GateKind::CNOT, target, control, {}};
  }
  static Gate r1(PhaseAngle a, std::size_t q) { return {GateKind::R1, q, 0, a}; }
  static Gate r1dg(PhaseAngle a, std::size_t q) { return {GateKind::R1dg, q, 0, a}; }

  bool is_rotation() const { return kind == GateKind::R1 || kind == GateKind::R1dg; }
  bool is_non_clifford() const { return is_rotation() && !angle.is_clifford(); }
  bool acts_on(std::size_t q) const {
    return target == q || (kind == GateKind::CNOT && control == q);
  }
  /// True if the gate is diagonal in the Z basis of qubit q (or does not
  /// touch it), so it commutes with any phase gate on q.
  bool diagonal_on(std::size_t q) const;

  Gate adjoint() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Body executed only when `measured_qubit` yields 1 in the Z basis.
/// Bodies hold plain gates, so blocks cannot nest.
struct ConditionedBlock {
  std::size_t measured_qubit = 0;
  std::vector<Gate> body;

  friend bool operator==(const ConditionedBlock&, const ConditionedBlock&) = default;
};

using CircuitElement = std::variant<Gate, ConditionedBlock>;

enum class RoleKind { Control, Target, Auxiliary };

struct QubitRole {
  RoleKind kind = RoleKind::Auxiliary;
  int variable = 0;  // 1-based x_i index for controls

  static QubitRole control(int i) { return {RoleKind::Control, i}; }
  static QubitRole target() { return {RoleKind::Target, 0}; }
  static QubitRole auxiliary() { return {RoleKind::Auxiliary, 0}; }

  std::string label() const;
  friend bool operator==(const QubitRole&, const QubitRole&) = default;
};

/// Ordered list of gates and conditioned blocks on `qubit_count` qubits.
/// Elements run left to right. All qubits default to the auxiliary role.
class Circuit {
 public:
  explicit Circuit(std::size_t qubit_count = 0);

  std::size_t qubit_count() const { return qubit_count_; }
  const std::vector<CircuitElement>& elements() const { return elements_; }
  const std::vector<QubitRole>& roles() const { return roles_; }
  bool empty() const { return elements_.empty(); }
  bool has_measurement() const;

  void set_role(std::size_t q, QubitRole role);
  Circuit& add(const Gate& g);
  Circuit& add(ConditionedBlock block);
  Circuit& append(const std::vector<Gate>& gates);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  void check_gate(const Gate& g) const;

  std::size_t qubit_count_;
  std::vector<CircuitElement> elements_;
  std::vector<QubitRole> roles_;
};

/// a then b. Roles are taken from a.
Circuit compose(const Circuit& a, const Circuit& b);

/// Reverse circuit with each gate replaced by its adjoint. Throws
/// std::invalid_argument if c contains a measurement.
Circuit adjoint(const Circuit& c);

/// Reverse-adjoint of a plain gate sequence.
std::vector<Gate> adjoint(const std::vector<Gate>& gates);

/// Minimum number of rotation stages. Clifford gates (including R1 at
/// multiples of pi/2) occupy no stage; a non-Clifford rotation starts a new
/// stage after every earlier gate sharing one of its qubits. A conditioned
/// block's body starts no earlier than the measured qubit's last stage.
std::size_t rotation_depth(const Circuit& c);

struct ResourceCounts {
  std::size_t cnot = 0;
  std::size_t r1_total = 0;
  std::size_t r1_non_clifford = 0;
  std::size_t h = 0;
  std::size_t s = 0;  // S and S-dagger
  std::size_t x = 0;
  std::size_t measurements = 0;
  std::size_t qubits = 0;
  std::size_t auxiliary = 0;

  friend bool operator==(const ResourceCounts&, const ResourceCounts&) = default;
};

/// Gate tally; conditioned bodies are counted unconditionally.
ResourceCounts resource_counts(const Circuit& c);

/// Folds each S on a qubit into the next R1dg on that qubit when only
/// gates diagonal on that qubit lie between them: S . R1dg(t) = R1dg(t - pi/2).
Circuit merge_s_gate(const Circuit& c);

}  // namespace fcnot
