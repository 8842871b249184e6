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

#include "fcnot/angle.hpp"

#include <algorithm>
#include <stdexcept>

namespace fcnot {

PhaseAngle::PhaseAngle(std::int64_t numerator, int log2_denominator)
    : numerator_(numerator), log2_denominator_(log2_denominator) {
  if (log2_denominator < 0 || log2_denominator > 62) {
    throw std::invalid_argument("PhaseAngle: denominator exponent out of range");
  }
  if (numerator_ == 0) {
    log2_denominator_ = 0;
    return;
  }
  while (log2_denominator_ > 0 && numerator_ % 2 == 0) {
    numerator_ /= 2;
    --log2_denominator_;
  }
}

PhaseAngle PhaseAngle::doubled() const {
  if (log2_denominator_ > 0) return PhaseAngle(numerator_, log2_denominator_ - 1);
  return PhaseAngle(numerator_ * 2, 0);
}

PhaseAngle operator+(const PhaseAngle& a, const PhaseAngle& b) {
  const int k = std::max(a.log2_denominator_, b.log2_denominator_);
  const std::int64_t na = a.numerator_ << (k - a.log2_denominator_);
  const std::int64_t nb = b.numerator_ << (k - b.log2_denominator_);
  return PhaseAngle(na + nb, k);
}

std::string PhaseAngle::to_expression() const {
  return std::to_string(numerator_) + "*pi/" + std::to_string(denominator());
}

std::string PhaseAngle::to_pretty() const {
  if (numerator_ == 0) return "0";
  std::string s;
  if (numerator_ < 0) s += '-';
  const std::int64_t mag = numerator_ < 0 ? -numerator_ : numerator_;
  if (mag != 1) s += std::to_string(mag);
  s += "π";
  if (log2_denominator_ > 0) s += "/" + std::to_string(denominator());
  return s;
}

}  // namespace fcnot
