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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

namespace fcnot {

/// An exact rotation angle of the form numerator * pi / 2^log2_denominator.
///
/// Values are kept in lowest terms (odd numerator, or log2_denominator == 0),
/// so two angles compare equal iff they denote the same rational multiple of
/// pi. No reduction modulo 2*pi is performed.
class PhaseAngle {
 public:
  constexpr PhaseAngle() = default;
  PhaseAngle(std::int64_t numerator, int log2_denominator);

  /// s * pi / 2^k, the form produced by spectral coefficients.
  static PhaseAngle from_fraction(std::int64_t numerator,
                                  int log2_denominator) {
    return PhaseAngle(numerator, log2_denominator);
  }
  static PhaseAngle half_pi() { return PhaseAngle(1, 1); }

  std::int64_t numerator() const { return numerator_; }
  int log2_denominator() const { return log2_denominator_; }
  std::int64_t denominator() const { return std::int64_t{1} << log2_denominator_; }

  bool is_zero() const { return numerator_ == 0; }
  /// True iff the angle is a multiple of pi/2, i.e. R1 of it is Clifford.
  bool is_clifford() const { return log2_denominator_ <= 1; }

  PhaseAngle doubled() const;
  PhaseAngle operator-() const { return PhaseAngle(-numerator_, log2_denominator_); }
  friend PhaseAngle operator+(const PhaseAngle& a, const PhaseAngle& b);
  friend PhaseAngle operator-(const PhaseAngle& a, const PhaseAngle& b) {
    return a + (-b);
  }
  friend bool operator==(const PhaseAngle&, const PhaseAngle&) = default;

  template <typename Scalar = double>
  Scalar radians() const {
    return static_cast<Scalar>(numerator_) * std::numbers::pi_v<Scalar> /
           static_cast<Scalar>(denominator());
  }

  /// "k*pi/d", the exact form used in assembly output.
  std::string to_expression() const;
  /// Short human form, e.g. "π/4", "-3π/8", "0".
  std::string to_pretty() const;

 private:
  std::int64_t numerator_ = 0;
  int log2_denominator_ = 0;
};

}  // namespace fcnot
