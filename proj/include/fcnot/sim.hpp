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

#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "fcnot/boolfn.hpp"
#include "fcnot/circuit.hpp"
#include "fcnot/synth.hpp"

namespace fcnot {

/// Amplitudes of an m-qubit register; qubit q is bit q of the index.
template <typename Scalar>
using BasicStateVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;
using StateVector = BasicStateVector<double>;

inline constexpr std::size_t kMaxSimQubits = 24;
inline constexpr double kBranchPruneThreshold = 1e-14;

template <typename Scalar>
BasicStateVector<Scalar> basis_state(std::size_t qubits, std::uint64_t index) {
  if (qubits > kMaxSimQubits) throw std::length_error("register too large to simulate");
  BasicStateVector<Scalar> psi = BasicStateVector<Scalar>::Zero(Eigen::Index{1} << qubits);
  psi(static_cast<Eigen::Index>(index)) = 1;
  return psi;
}

template <typename Derived>
std::size_t qubit_count(const Eigen::MatrixBase<Derived>& psi) {
  return static_cast<std::size_t>(std::countr_zero(static_cast<std::uint64_t>(psi.size())));
}

/// Applies one gate in place.
template <typename Scalar>
void apply_gate(const Gate& g, BasicStateVector<Scalar>& psi) {
  using Complex = std::complex<Scalar>;
  const Eigen::Index size = psi.size();
  const Eigen::Index mask = Eigen::Index{1} << g.target;

  auto phase_on_one = [&](Complex phase) {
    for (Eigen::Index i = 0; i < size; ++i) {
      if (i & mask) psi(i) *= phase;
    }
  };

  switch (g.kind) {
    case GateKind::H: {
      const Scalar r = Scalar(1) / std::sqrt(Scalar(2));
      for (Eigen::Index base = 0; base < size; base += 2 * mask) {
        for (Eigen::Index i = base; i < base + mask; ++i) {
          const Complex a = psi(i);
          const Complex b = psi(i + mask);
          psi(i) = r * (a + b);
          psi(i + mask) = r * (a - b);
        }
      }
      break;
    }
    case GateKind::X:
      for (Eigen::Index base = 0; base < size; base += 2 * mask) {
        for (Eigen::Index i = base; i < base + mask; ++i) std::swap(psi(i), psi(i + mask));
      }
      break;
    case GateKind::CNOT: {
      const Eigen::Index cmask = Eigen::Index{1} << g.control;
      for (Eigen::Index i = 0; i < size; ++i) {
        if ((i & cmask) && !(i & mask)) std::swap(psi(i), psi(i | mask));
      }
      break;
    }
    case GateKind::S: phase_on_one(Complex(0, 1)); break;
    case GateKind::Sdg: phase_on_one(Complex(0, -1)); break;
    case GateKind::R1: phase_on_one(std::polar(Scalar(1), g.angle.radians<Scalar>())); break;
    case GateKind::R1dg: phase_on_one(std::polar(Scalar(1), -g.angle.radians<Scalar>())); break;
  }
}

struct MeasurementRecord {
  std::size_t qubit = 0;
  int outcome = 0;
  friend bool operator==(const MeasurementRecord&, const MeasurementRecord&) = default;
};

template <typename Scalar>
struct BasicBranch {
  std::vector<MeasurementRecord> outcomes;  // in measurement order
  Scalar probability = 1;
  BasicStateVector<Scalar> state;
};

template <typename Scalar>
using BasicBranchedState = std::vector<BasicBranch<Scalar>>;
using Branch = BasicBranch<double>;
using BranchedState = BasicBranchedState<double>;

/// Runs the circuit on psi. Each conditioned block splits every branch into
/// the Z-basis outcomes of its measured qubit; outcomes with absolute
/// probability below kBranchPruneThreshold are dropped.
template <typename Scalar>
BasicBranchedState<Scalar> apply(const Circuit& c, const BasicStateVector<Scalar>& psi) {
  if (psi.size() != (Eigen::Index{1} << c.qubit_count())) {
    throw std::invalid_argument("state size does not match circuit qubit count");
  }
  BasicBranchedState<Scalar> branches;
  branches.push_back({{}, Scalar(1), psi});

  for (const CircuitElement& e : c.elements()) {
    if (const Gate* g = std::get_if<Gate>(&e)) {
      for (auto& b : branches) apply_gate(*g, b.state);
      continue;
    }
    const auto& block = std::get<ConditionedBlock>(e);
    const Eigen::Index mask = Eigen::Index{1} << block.measured_qubit;
    BasicBranchedState<Scalar> next;
    for (auto& b : branches) {
      for (int outcome = 0; outcome < 2; ++outcome) {
        BasicStateVector<Scalar> projected = b.state;
        for (Eigen::Index i = 0; i < projected.size(); ++i) {
          if (((i & mask) != 0) != (outcome == 1)) projected(i) = 0;
        }
        const Scalar p = projected.squaredNorm();
        if (b.probability * p < Scalar(kBranchPruneThreshold)) continue;
        projected /= std::sqrt(p);
        if (outcome == 1) {
          for (const Gate& body_gate : block.body) apply_gate(body_gate, projected);
        }
        auto record = b.outcomes;
        record.push_back({block.measured_qubit, outcome});
        next.push_back({std::move(record), b.probability * p, std::move(projected)});
      }
    }
    Scalar total = 0;
    for (const auto& b : next) total += b.probability;
    for (auto& b : next) b.probability /= total;
    branches = std::move(next);
  }
  return branches;
}

/// True iff |<a|b>| >= 1 - tol.
template <typename DerivedA, typename DerivedB>
bool state_equal_up_to_phase(const Eigen::MatrixBase<DerivedA>& a,
                             const Eigen::MatrixBase<DerivedB>& b, double tol) {
  if (a.size() != b.size()) return false;
  return std::abs(a.dot(b)) >= 1.0 - tol;
}

/// Haar-like random state over the given basis indices (normalized complex
/// Gaussian amplitudes).
StateVector random_state(std::size_t qubits, const std::vector<std::uint64_t>& support,
                         std::mt19937_64& rng);

enum class OracleMode { General, TargetZero, TargetFx };

OracleMode oracle_mode(ConstructionKind kind);

/// A basis permutation on logical indices x | (y << n), restricted to the
/// inputs it is specified on.
struct BasisAction {
  int num_vars = 0;
  std::function<bool(std::uint64_t)> legal;
  std::function<std::uint64_t(std::uint64_t)> image;
};

/// |x>|y> -> |x>|y ^ f(x)> on the mode's legal inputs: all (General),
/// y = 0 (TargetZero) or y = f(x) (TargetFx).
BasisAction oracle_unitary(const TruthTable& f, OracleMode mode);

/// Identity on the inputs legal for `mode`.
BasisAction identity_action(const TruthTable& f, OracleMode mode);

struct VerifyOptions {
  std::size_t random_states = 20;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
};

enum class Verdict { Pass, Fail, Unverifiable };

std::string_view verdict_name(Verdict v);

struct VerificationReport {
  std::string construction;
  std::string function;
  std::size_t qubits = 0;
  std::size_t basis_inputs = 0;
  std::size_t random_inputs = 0;
  std::uint64_t seed = 0;
  double tolerance = 0;
  std::size_t branches_checked = 0;
  double max_infidelity = 0;
  bool ancillas_restored = true;
  Verdict verdict = Verdict::Pass;
  std::string counterexample;

  bool passed() const { return verdict == Verdict::Pass; }
};

std::string to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

/// Report for a circuit over kMaxSimQubits; never a silent pass.
VerificationReport unverifiable_report(std::size_t qubits, const VerifyOptions& options,
                                       std::string construction_label = {},
                                       std::string function_label = {});

/// Checks every legal basis input and options.random_states random
/// superpositions of legal inputs, auxiliaries starting in |0>. Each
/// output branch must match the action's image up to a global phase and
/// leave every auxiliary qubit in |0>.
VerificationReport verify_action(const Circuit& c, const Layout& layout,
                                 const BasisAction& action, const VerifyOptions& options,
                                 std::string construction_label = {},
                                 std::string function_label = {});

VerificationReport verify(const SynthesisResult& result, const TruthTable& f,
                          const VerifyOptions& options = {});

/// Checks U_f = (I (x) H) D (I (x) H) with D = diag(g^) for g = x_{n+1} AND f,
/// building D both from g^ directly and from the phase polynomial with
/// angles pi * s'_k / 2^{n+1}. Requires n <= 6.
bool diagonal_decomposition_check(const TruthTable& f, double tol = 1e-9);

}  // namespace fcnot
