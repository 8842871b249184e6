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

#include "fcnot/boolfn.hpp"

#include <sstream>

namespace fcnot {

namespace {

void check_num_vars(int num_vars) {
  if (num_vars < 1 || num_vars > kMaxVariables) {
    throw std::out_of_range("variable count must be in [1, " +
                            std::to_string(kMaxVariables) + "], got " +
                            std::to_string(num_vars));
  }
}

}  // namespace

TruthTable::TruthTable(int num_vars, std::vector<bool> bits)
    : num_vars_(num_vars), bits_(std::move(bits)) {
  check_num_vars(num_vars);
  if (bits_.size() != (std::size_t{1} << num_vars)) {
    throw std::invalid_argument("truth table length must be 2^n");
  }
}

TruthTable::TruthTable(int num_vars)
    : TruthTable(num_vars, std::vector<bool>(std::size_t{1} << num_vars, false)) {}

TruthTable TruthTable::from_index(int num_vars, std::uint64_t index) {
  check_num_vars(num_vars);
  if (num_vars > 6) throw std::out_of_range("from_index requires n <= 6");
  const std::size_t size = std::size_t{1} << num_vars;
  if (size < 64 && (index >> size) != 0) {
    throw std::out_of_range("function index exceeds 2^(2^n)");
  }
  std::vector<bool> bits(size);
  for (std::size_t k = 0; k < size; ++k) bits[k] = (index >> k) & 1U;
  return TruthTable(num_vars, std::move(bits));
}

TruthTable TruthTable::random(int num_vars, std::mt19937_64& rng) {
  check_num_vars(num_vars);
  std::vector<bool> bits(std::size_t{1} << num_vars);
  std::uint64_t word = 0;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (k % 64 == 0) word = rng();
    bits[k] = (word >> (k % 64)) & 1U;
  }
  return TruthTable(num_vars, std::move(bits));
}

std::string TruthTable::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string hex;
  const std::size_t nibbles = (bits_.size() + 3) / 4;
  for (std::size_t i = nibbles; i-- > 0;) {
    unsigned nibble = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t k = 4 * i + b;
      if (k < bits_.size() && bits_[k]) nibble |= 1U << b;
    }
    hex += kDigits[nibble];
  }
  return "0x" + hex + ":" + std::to_string(num_vars_);
}

IntVector pm_one_vector(const TruthTable& f) {
  IntVector v(static_cast<Eigen::Index>(f.size()));
  for (std::size_t k = 0; k < f.size(); ++k) v(static_cast<Eigen::Index>(k)) = f[k] ? -1 : 1;
  return v;
}

GrayCode gray_code(int num_vars) {
  if (num_vars < 0 || num_vars > 31) throw std::out_of_range("gray_code: bad n");
  GrayCode code;
  code.num_vars = num_vars;
  const std::uint32_t size = 1U << num_vars;
  code.codewords.resize(size);
  code.deltas.resize(size);
  for (std::uint32_t k = 0; k < size; ++k) {
    code.codewords[k] = k ^ (k >> 1);
    code.deltas[k] = k + 1 < size ? rho(k + 1) : num_vars - 1;
  }
  return code;
}

SpectralData spectrum(const TruthTable& f) {
  SpectralData sd;
  sd.num_vars = f.num_vars();
  sd.pm_vector = pm_one_vector(f);
  sd.coefficients = walsh_hadamard(sd.pm_vector);
  return sd;
}

AngleTable angles(const SpectralData& sd) {
  AngleTable table;
  table.num_vars = sd.num_vars;
  table.angles.reserve(static_cast<std::size_t>(sd.coefficients.size()));
  for (Eigen::Index j = 0; j < sd.coefficients.size(); ++j) {
    table.angles.push_back(PhaseAngle::from_fraction(sd.coefficients(j), sd.num_vars + 1));
  }
  return table;
}

IntVector lifted_spectrum(const SpectralData& sd) {
  const Eigen::Index half = sd.coefficients.size();
  const std::int64_t offset = std::int64_t{1} << sd.num_vars;
  IntVector lifted(2 * half);
  lifted.head(half) = sd.coefficients;
  lifted.tail(half) = -sd.coefficients;
  lifted(0) += offset;
  lifted(half) += offset;
  return lifted;
}

}  // namespace fcnot
