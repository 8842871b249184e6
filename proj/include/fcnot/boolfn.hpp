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
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "fcnot/angle.hpp"

namespace fcnot {

inline constexpr int kMaxVariables = 16;

/// Dense integer vector used for +-1 codings and spectra.
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// An n-variable Boolean function stored as its 2^n-entry truth table.
///
/// Entry k holds f(x) where x_i is bit (i - 1) of k, i.e. x_1 is the least
/// significant bit of the table index.
class TruthTable {
 public:
  TruthTable(int num_vars, std::vector<bool> bits);
  /// Constant-0 function.
  explicit TruthTable(int num_vars);

  /// Function whose table, read as a 2^n-bit integer, equals `index`
  /// (bit k of index is f at k). Requires 2^n <= 64.
  static TruthTable from_index(int num_vars, std::uint64_t index);
  static TruthTable random(int num_vars, std::mt19937_64& rng);

  int num_vars() const { return num_vars_; }
  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t k) const { return bits_[k]; }
  bool evaluate(std::uint64_t x) const { return bits_.at(x); }
  const std::vector<bool>& bits() const { return bits_; }

  /// Canonical `0x<hex>:<n>` text.
  std::string to_hex() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  int num_vars_;
  std::vector<bool> bits_;
};

/// +-1 coding and Walsh-Hadamard spectrum of a function.
struct SpectralData {
  int num_vars = 0;
  IntVector pm_vector;
  IntVector coefficients;
};

/// theta_j = s_j * pi / 2^{n+1}, held exactly.
struct AngleTable {
  int num_vars = 0;
  std::vector<PhaseAngle> angles;

  const PhaseAngle& operator[](std::size_t j) const { return angles[j]; }
};

/// Cyclic reflected binary Gray code with v_0 = 0 and
/// v_{(k+1) mod 2^n} = v_k ^ (1 << deltas[k]).
///
/// For n = 0 the code has the single word 0 and deltas = {-1}, standing for
/// the absent CNOT at the start of the first subcircuit.
struct GrayCode {
  int num_vars = 0;
  std::vector<std::uint32_t> codewords;
  std::vector<int> deltas;
};

/// Sideways sum (Hamming weight).
constexpr int mu(std::uint64_t x) { return std::popcount(x); }

/// Ruler function: exponent of the largest power of two dividing x.
inline int rho(std::uint64_t x) {
  if (x == 0) throw std::domain_error("rho(0) is unbounded");
  return std::countr_zero(x);
}

/// 2^rho(x), the lowest set bit of x.
inline std::uint64_t trailing_bit(std::uint64_t x) {
  if (x == 0) throw std::domain_error("trailing_bit(0) is undefined");
  return x & (~x + 1);
}

IntVector pm_one_vector(const TruthTable& f);

/// Fast Walsh-Hadamard transform: returns H_n * v using n * 2^n additions.
/// Works for any dense column vector whose length is a power of two.
template <typename Derived>
typename Derived::PlainObject walsh_hadamard(const Eigen::MatrixBase<Derived>& v) {
  const Eigen::Index size = v.size();
  if (size <= 0 || !std::has_single_bit(static_cast<std::uint64_t>(size))) {
    throw std::invalid_argument("walsh_hadamard: length must be a power of two");
  }
  typename Derived::PlainObject out = v;
  for (Eigen::Index half = 1; half < size; half *= 2) {
    for (Eigen::Index block = 0; block < size; block += 2 * half) {
      for (Eigen::Index j = block; j < block + half; ++j) {
        const auto a = out(j);
        const auto b = out(j + half);
        out(j) = a + b;
        out(j + half) = a - b;
      }
    }
  }
  return out;
}

GrayCode gray_code(int num_vars);

SpectralData spectrum(const TruthTable& f);
AngleTable angles(const SpectralData& sd);

/// Spectrum of g = x_{n+1} AND f, computed in closed form from that of f.
IntVector lifted_spectrum(const SpectralData& sd);

/// Parses `0x<hex>:<n>` or a Boolean expression over x1..xn.
TruthTable parse_function(std::string_view text);

/// Raised by parse_function; `position` is a 0-based character offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace fcnot
