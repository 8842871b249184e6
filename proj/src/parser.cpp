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

#include <cctype>
#include <memory>

#include "fcnot/boolfn.hpp"

namespace fcnot {

namespace {

struct Expr {
  enum class Op { Const, Var, Not, And, Xor, Or } op;
  int value = 0;  // constant value or variable index (1-based)
  std::unique_ptr<Expr> lhs, rhs;

  bool eval(std::uint64_t x) const {
    switch (op) {
      case Op::Const: return value != 0;
      case Op::Var: return (x >> (value - 1)) & 1U;
      case Op::Not: return !lhs->eval(x);
      case Op::And: return lhs->eval(x) && rhs->eval(x);
      case Op::Xor: return lhs->eval(x) != rhs->eval(x);
      case Op::Or: return lhs->eval(x) || rhs->eval(x);
    }
    return false;
  }
};

using ExprPtr = std::unique_ptr<Expr>;

ExprPtr make_binary(Expr::Op op, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_unique<Expr>();
  e->op = op;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

// Precedence, loosest first: '|' < '^' < '&' < '~'. Binary operators are
// left-associative.
class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = parse_or();
    skip_space();
    if (pos_ != text_.size()) {
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return e;
  }

  int max_variable() const { return max_var_; }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr parse_or() {
    ExprPtr lhs = parse_xor();
    while (accept('|')) lhs = make_binary(Expr::Op::Or, std::move(lhs), parse_xor());
    return lhs;
  }

  ExprPtr parse_xor() {
    ExprPtr lhs = parse_and();
    while (accept('^')) lhs = make_binary(Expr::Op::Xor, std::move(lhs), parse_and());
    return lhs;
  }

  ExprPtr parse_and() {
    ExprPtr lhs = parse_unary();
    while (accept('&')) lhs = make_binary(Expr::Op::And, std::move(lhs), parse_unary());
    return lhs;
  }

  ExprPtr parse_unary() {
    if (accept('~')) {
      auto e = std::make_unique<Expr>();
      e->op = Expr::Op::Not;
      e->lhs = parse_unary();
      return e;
    }
    return parse_primary();
  }

  ExprPtr parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr inner = parse_or();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      auto e = std::make_unique<Expr>();
      e->op = Expr::Op::Const;
      e->value = c - '0';
      return e;
    }
    if (c == 'x' || c == 'X') {
      ++pos_;
      const std::size_t digits = pos_;
      int index = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        index = index * 10 + (text_[pos_] - '0');
        if (index > kMaxVariables) {
          throw ParseError("variable index exceeds " + std::to_string(kMaxVariables), start);
        }
        ++pos_;
      }
      if (pos_ == digits) throw ParseError("expected variable subscript", pos_);
      if (index < 1) throw ParseError("variable subscripts start at 1", start);
      if (index > max_var_) max_var_ = index;
      auto e = std::make_unique<Expr>();
      e->op = Expr::Op::Var;
      e->value = index;
      return e;
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int max_var_ = 0;
};

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

TruthTable parse_hex(std::string_view text, std::size_t offset) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("expected ':<n>' after hex payload", offset + text.size());
  const std::string_view payload = text.substr(2, colon - 2);
  const std::string_view count = text.substr(colon + 1);
  if (payload.empty()) throw ParseError("empty hex payload", offset + 2);
  if (count.empty()) throw ParseError("missing variable count", offset + colon + 1);
  int num_vars = 0;
  for (std::size_t i = 0; i < count.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(count[i]))) {
      throw ParseError("invalid variable count", offset + colon + 1 + i);
    }
    num_vars = num_vars * 10 + (count[i] - '0');
    if (num_vars > kMaxVariables) break;
  }
  if (num_vars < 1 || num_vars > kMaxVariables) {
    throw ParseError("variable count out of range [1, " + std::to_string(kMaxVariables) + "]",
                     offset + colon + 1);
  }
  const std::size_t size = std::size_t{1} << num_vars;
  std::vector<bool> bits(size, false);
  for (std::size_t i = 0; i < payload.size(); ++i) {
    const std::size_t at = payload.size() - 1 - i;  // i-th nibble from the right
    const int nibble = hex_value(payload[at]);
    if (nibble < 0) throw ParseError("invalid hex digit", offset + 2 + at);
    for (int b = 0; b < 4; ++b) {
      if (!((nibble >> b) & 1)) continue;
      const std::size_t k = 4 * i + static_cast<std::size_t>(b);
      if (k >= size) {
        throw ParseError("hex payload wider than 2^" + std::to_string(num_vars) + " bits",
                         offset + 2 + at);
      }
      bits[k] = true;
    }
  }
  return TruthTable(num_vars, std::move(bits));
}

}  // namespace

TruthTable parse_function(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  std::size_t last = text.size();
  while (last > first && std::isspace(static_cast<unsigned char>(text[last - 1]))) --last;
  const std::string_view body = text.substr(first, last - first);

  if (body.size() >= 2 && body[0] == '0' && (body[1] == 'x' || body[1] == 'X')) {
    return parse_hex(body, first);
  }

  ExprParser parser(text);
  const ExprPtr expr = parser.parse();
  const int num_vars = parser.max_variable();
  if (num_vars < 1) throw ParseError("expression mentions no variable x1..xn", 0);
  std::vector<bool> bits(std::size_t{1} << num_vars);
  for (std::size_t x = 0; x < bits.size(); ++x) bits[x] = expr->eval(x);
  return TruthTable(num_vars, std::move(bits));
}

}  // namespace fcnot
