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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fcnot/boolfn.hpp"
#include "fcnot/circuit.hpp"

namespace fcnot {

enum class ConstructionKind {
  GeneralLowWidth,
  GeneralDepth1,
  AndLowWidth,
  AndDepth1,
  AndDgLowWidth,
  AndDgDepth1,
};

inline constexpr std::array<ConstructionKind, 6> kAllConstructions = {
    ConstructionKind::GeneralLowWidth, ConstructionKind::GeneralDepth1,
    ConstructionKind::AndLowWidth,     ConstructionKind::AndDepth1,
    ConstructionKind::AndDgLowWidth,   ConstructionKind::AndDgDepth1};

/// What the target qubit is promised to hold on input.
enum class TargetContract { Arbitrary, Zero, FOfX };
enum class Direction { Compute, Uncompute };

TargetContract target_contract(ConstructionKind kind);
Direction direction(ConstructionKind kind);

/// CLI spelling, e.g. "general-lowwidth".
std::string_view construction_name(ConstructionKind kind);
std::optional<ConstructionKind> construction_from_name(std::string_view name);

/// Closed-form auxiliary qubit count for the construction at n variables.
std::size_t expected_ancillas(ConstructionKind kind, int num_vars);
/// Qubit count of the emitted circuit.
std::size_t expected_qubits(ConstructionKind kind, int num_vars);

/// Where each logical wire lives in the circuit.
struct Layout {
  std::vector<std::size_t> controls;  // controls[i] carries x_{i+1}
  std::size_t target = 0;
  std::vector<std::size_t> auxiliaries;
};

Layout layout_of(const Circuit& c);

struct SynthesisResult {
  ConstructionKind kind;
  Circuit circuit;
  Layout layout;
  ResourceCounts counts;
  std::size_t rotation_depth = 0;
  std::size_t ancilla_count = 0;
};

SynthesisResult synth_general_low_width(const AngleTable& theta);
SynthesisResult synth_general_depth1(const AngleTable& theta);
SynthesisResult synth_and_low_width(const AngleTable& theta);
SynthesisResult synth_and_depth1(const AngleTable& theta);
SynthesisResult synth_anddg_low_width(const AngleTable& theta);
SynthesisResult synth_anddg_depth1(const AngleTable& theta);

inline SynthesisResult synth_general_low_width(const TruthTable& f) {
  return synth_general_low_width(angles(spectrum(f)));
}
inline SynthesisResult synth_general_depth1(const TruthTable& f) {
  return synth_general_depth1(angles(spectrum(f)));
}
inline SynthesisResult synth_and_low_width(const TruthTable& f) {
  return synth_and_low_width(angles(spectrum(f)));
}
inline SynthesisResult synth_and_depth1(const TruthTable& f) {
  return synth_and_depth1(angles(spectrum(f)));
}
inline SynthesisResult synth_anddg_low_width(const TruthTable& f) {
  return synth_anddg_low_width(angles(spectrum(f)));
}
inline SynthesisResult synth_anddg_depth1(const TruthTable& f) {
  return synth_anddg_depth1(angles(spectrum(f)));
}

SynthesisResult synthesize(ConstructionKind kind, const AngleTable& theta);
SynthesisResult synthesize(ConstructionKind kind, const TruthTable& f);

/// Recomputes counts and depth after the circuit has been rewritten.
void refresh_metrics(SynthesisResult& result);

}  // namespace fcnot
