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
#include <string>

#include "fcnot/circuit.hpp"

namespace fcnot {

struct DiagramOptions {
  /// Maximum characters per output line; wider diagrams wrap into
  /// stacked panels marked with '»' / '«'. 0 disables wrapping.
  std::size_t max_width = 120;
};

/// Column diagram with one row per qubit, labeled by role and index
/// (e.g. "x1_0"). Gates are packed into as-soon-as-possible columns.
/// Measurements get a classical row "c" drawn with a double line.
std::string to_text_diagram(const Circuit& c, const DiagramOptions& options = {});

/// OpenQASM 3 text. Rotations are written as exact phase gates
/// `p(k*pi/2^j)`; each conditioned block becomes a measurement into c[0]
/// followed by one `if (c[0] == 1) { ... }` region.
std::string to_qasm(const Circuit& c);

}  // namespace fcnot
