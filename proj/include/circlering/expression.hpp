// Copyright 2026 The circlering Authors.
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

#ifndef CIRCLERING_EXPRESSION_HPP_
#define CIRCLERING_EXPRESSION_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "circlering/trigpoly.hpp"

namespace circlering {

// Grammar (EBNF), standard precedence ^ > unary minus > * / > + -:
//
//   expr    = term { ("+" | "-") term } ;
//   term    = unary { ("*" | "/") unary } ;
//   unary   = ("-" | "+") unary | power ;
//   power   = primary [ "^" unary ] ;
//   primary = number | "pi" | "x" | ("cos" | "sin") "(" expr ")"
//           | "(" expr ")" ;
//   number  = ( digits [ "." [ digits ] ] | "." digits )
//             [ ("e" | "E") [ "+" | "-" ] digits ] ;
//
// Lowering to a TrigPoly further requires: trigonometric arguments of the
// form k*x + c with integer k and constant c; exponents that are constant
// nonnegative integers; divisors that are nonzero constants; and `x` only
// inside a trigonometric argument.
struct ExprNode {
  enum class Kind { kNumber, kPi, kVariable, kNegate, kAdd, kSubtract,
                    kMultiply, kDivide, kPower, kCos, kSin };
  Kind kind;
  std::size_t position;  // byte offset of the token that introduced it
  double value = 0.0;    // kNumber only
  std::shared_ptr<const ExprNode> lhs;  // operand / base / argument
  std::shared_ptr<const ExprNode> rhs;  // binary right side / exponent
};

using Expression = std::shared_ptr<const ExprNode>;

// Throws SyntaxError.
Expression parse(std::string_view text);

// Expands an expression into a trigonometric polynomial (angle-addition for
// phase shifts, repeated products for powers). Throws
// UnsupportedConstructError.
TrigPoly lower(const Expression& e);

inline TrigPoly parse_trigpoly(std::string_view text) {
  return lower(parse(text));
}

// Evaluates an expression without `x`, e.g. "3*pi/2".
double parse_constant(std::string_view text);

// Text that parses back to t coefficient for coefficient.
std::string print(const TrigPoly& t);

}  // namespace circlering

#endif  // CIRCLERING_EXPRESSION_HPP_
