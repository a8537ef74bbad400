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

#include "circlering/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <utility>

#include "circlering/errors.hpp"

namespace circlering {
namespace {

using Kind = ExprNode::Kind;

constexpr int kMaxExponent = 64;

enum class Tok { kNumber, kIdent, kPlus, kMinus, kStar, kSlash, kCaret,
                 kLParen, kRParen, kEnd };

struct Token {
  Tok type;
  std::size_t pos;
  std::string text;
  double number = 0.0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
    const std::size_t start = pos_;
    if (pos_ == src_.size()) return {Tok::kEnd, start, ""};
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number(start);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      return {Tok::kIdent, start, std::string(src_.substr(start, pos_ - start))};
    }
    ++pos_;
    switch (c) {
      case '+': return {Tok::kPlus, start, "+"};
      case '-': return {Tok::kMinus, start, "-"};
      case '*': return {Tok::kStar, start, "*"};
      case '/': return {Tok::kSlash, start, "/"};
      case '^': return {Tok::kCaret, start, "^"};
      case '(': return {Tok::kLParen, start, "("};
      case ')': return {Tok::kRParen, start, ")"};
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", start);
    }
  }

 private:
  Token number(std::size_t start) {
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t mantissa = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) throw SyntaxError("malformed number", start);
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (digits() == 0) throw SyntaxError("malformed exponent", start);
    }
    std::string text(src_.substr(start, pos_ - start));
    return {Tok::kNumber, start, text, std::strtod(text.c_str(), nullptr)};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

Expression make(Kind kind, std::size_t pos, Expression lhs = nullptr,
                Expression rhs = nullptr, double value = 0.0) {
  return std::make_shared<const ExprNode>(
      ExprNode{kind, pos, value, std::move(lhs), std::move(rhs)});
}

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { advance(); }

  Expression parse_all() {
    Expression e = expr();
    if (cur_.type != Tok::kEnd) {
      throw SyntaxError("unexpected '" + cur_.text + "'", cur_.pos);
    }
    return e;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  Expression expr() {
    Expression lhs = term();
    while (cur_.type == Tok::kPlus || cur_.type == Tok::kMinus) {
      const Kind k = cur_.type == Tok::kPlus ? Kind::kAdd : Kind::kSubtract;
      const std::size_t pos = cur_.pos;
      advance();
      lhs = make(k, pos, lhs, term());
    }
    return lhs;
  }

  Expression term() {
    Expression lhs = unary();
    while (cur_.type == Tok::kStar || cur_.type == Tok::kSlash) {
      const Kind k = cur_.type == Tok::kStar ? Kind::kMultiply : Kind::kDivide;
      const std::size_t pos = cur_.pos;
      advance();
      lhs = make(k, pos, lhs, unary());
    }
    return lhs;
  }

  Expression unary() {
    if (cur_.type == Tok::kMinus) {
      const std::size_t pos = cur_.pos;
      advance();
      return make(Kind::kNegate, pos, unary());
    }
    if (cur_.type == Tok::kPlus) {
      advance();
      return unary();
    }
    return power();
  }

  Expression power() {
    Expression base = primary();
    if (cur_.type == Tok::kCaret) {
      const std::size_t pos = cur_.pos;
      advance();
      return make(Kind::kPower, pos, base, unary());
    }
    return base;
  }

  Expression primary() {
    const Token t = cur_;
    switch (t.type) {
      case Tok::kNumber:
        advance();
        return make(Kind::kNumber, t.pos, nullptr, nullptr, t.number);
      case Tok::kLParen: {
        advance();
        Expression inner = expr();
        expect(Tok::kRParen, "')'");
        return inner;
      }
      case Tok::kIdent:
        return identifier(t);
      case Tok::kEnd:
        throw SyntaxError("unexpected end of input", t.pos);
      default:
        throw SyntaxError("unexpected '" + t.text + "'", t.pos);
    }
  }

  Expression identifier(const Token& t) {
    advance();
    if (t.text == "x") return make(Kind::kVariable, t.pos);
    if (t.text == "pi") return make(Kind::kPi, t.pos);
    if (t.text == "cos" || t.text == "sin") {
      expect(Tok::kLParen, "'(' after " + t.text);
      Expression arg = expr();
      expect(Tok::kRParen, "')'");
      return make(t.text == "cos" ? Kind::kCos : Kind::kSin, t.pos, arg);
    }
    if (cur_.type == Tok::kLParen) {
      throw UnsupportedConstructError("function '" + t.text + "'", t.pos);
    }
    throw SyntaxError("unknown identifier '" + t.text + "'", t.pos);
  }

  void expect(Tok type, const std::string& what) {
    if (cur_.type != type) {
      throw SyntaxError("expected " + what, cur_.pos);
    }
    advance();
  }

  Lexer lexer_;
  Token cur_{Tok::kEnd, 0, ""};
};

// k*x + c.
struct Linear {
  double slope = 0.0;
  double offset = 0.0;
};

int exponent_of(const ExprNode& power, const Linear& e) {
  if (e.slope != 0.0) {
    throw UnsupportedConstructError("exponent depends on x", power.position);
  }
  const double r = std::round(e.offset);
  if (std::abs(e.offset - r) > 1e-12 || r < 0.0) {
    throw UnsupportedConstructError("exponent must be a nonnegative integer",
                                    power.position);
  }
  if (r > kMaxExponent) {
    throw UnsupportedConstructError("exponent too large", power.position);
  }
  return static_cast<int>(r);
}

Linear lower_linear(const ExprNode& n) {
  switch (n.kind) {
    case Kind::kNumber: return {0.0, n.value};
    case Kind::kPi: return {0.0, std::numbers::pi};
    case Kind::kVariable: return {1.0, 0.0};
    case Kind::kNegate: {
      const Linear a = lower_linear(*n.lhs);
      return {-a.slope, -a.offset};
    }
    case Kind::kAdd:
    case Kind::kSubtract: {
      const Linear a = lower_linear(*n.lhs);
      const Linear b = lower_linear(*n.rhs);
      const double s = n.kind == Kind::kAdd ? 1.0 : -1.0;
      return {a.slope + s * b.slope, a.offset + s * b.offset};
    }
    case Kind::kMultiply: {
      const Linear a = lower_linear(*n.lhs);
      const Linear b = lower_linear(*n.rhs);
      if (a.slope != 0.0 && b.slope != 0.0) {
        throw UnsupportedConstructError("argument is not linear in x", n.position);
      }
      return {a.slope * b.offset + b.slope * a.offset, a.offset * b.offset};
    }
    case Kind::kDivide: {
      const Linear a = lower_linear(*n.lhs);
      const Linear b = lower_linear(*n.rhs);
      if (b.slope != 0.0) {
        throw UnsupportedConstructError("division by a non-constant", n.position);
      }
      if (b.offset == 0.0) {
        throw UnsupportedConstructError("division by zero", n.position);
      }
      return {a.slope / b.offset, a.offset / b.offset};
    }
    case Kind::kPower: {
      const Linear base = lower_linear(*n.lhs);
      const int k = exponent_of(n, lower_linear(*n.rhs));
      if (base.slope != 0.0 && k != 1) {
        throw UnsupportedConstructError("argument is not linear in x", n.position);
      }
      if (k == 1) return base;
      return {0.0, std::pow(base.offset, k)};
    }
    case Kind::kCos:
    case Kind::kSin: {
      const Linear a = lower_linear(*n.lhs);
      if (a.slope != 0.0) {
        throw UnsupportedConstructError(
            "nested trigonometric function of x", n.position);
      }
      return {0.0, n.kind == Kind::kCos ? std::cos(a.offset) : std::sin(a.offset)};
    }
  }
  throw UnsupportedConstructError("unknown node", n.position);
}

TrigPoly lower_value(const ExprNode& n) {
  switch (n.kind) {
    case Kind::kNumber: return TrigPoly::constant(n.value);
    case Kind::kPi: return TrigPoly::constant(std::numbers::pi);
    case Kind::kVariable:
      throw UnsupportedConstructError(
          "x may only appear inside cos(...) or sin(...)", n.position);
    case Kind::kNegate: return scale(lower_value(*n.lhs), -1.0);
    case Kind::kAdd: return add(lower_value(*n.lhs), lower_value(*n.rhs));
    case Kind::kSubtract:
      return add(lower_value(*n.lhs), scale(lower_value(*n.rhs), -1.0));
    case Kind::kMultiply:
      return multiply(lower_value(*n.lhs), lower_value(*n.rhs));
    case Kind::kDivide: {
      const TrigPoly d = lower_value(*n.rhs);
      if (d.degree() != 0) {
        throw UnsupportedConstructError("division by a non-constant", n.position);
      }
      if (d.cos_coeff(0) == 0.0) {
        throw UnsupportedConstructError("division by zero", n.position);
      }
      return scale(lower_value(*n.lhs), 1.0 / d.cos_coeff(0));
    }
    case Kind::kPower:
      return power(lower_value(*n.lhs), exponent_of(n, lower_linear(*n.rhs)));
    case Kind::kCos:
    case Kind::kSin: {
      const Linear a = lower_linear(*n.lhs);
      const double k = std::round(a.slope);
      if (std::abs(a.slope - k) > 1e-12) {
        throw UnsupportedConstructError("harmonic must be an integer multiple of x",
                                        n.position);
      }
      if (std::abs(k) > 4096) {
        throw UnsupportedConstructError("harmonic too large", n.position);
      }
      // cos(kx + c) = cos c cos kx - sin c sin kx
      // sin(kx + c) = sin c cos kx + cos c sin kx
      const int h = static_cast<int>(k);
      const double cc = std::cos(a.offset), sc = std::sin(a.offset);
      const TrigPoly ck = TrigPoly::cos_harmonic(h);
      const TrigPoly sk = TrigPoly::sin_harmonic(h);
      if (n.kind == Kind::kCos) return add(scale(ck, cc), scale(sk, -sc));
      return add(scale(ck, sc), scale(sk, cc));
    }
  }
  throw UnsupportedConstructError("unknown node", n.position);
}

}  // namespace

Expression parse(std::string_view text) { return Parser(text).parse_all(); }

TrigPoly lower(const Expression& e) { return lower_value(*e); }

double parse_constant(std::string_view text) {
  const Expression e = parse(text);
  const Linear v = lower_linear(*e);
  if (v.slope != 0.0) {
    throw UnsupportedConstructError("expected a constant, found x", e->position);
  }
  return v.offset;
}

std::string print(const TrigPoly& t) {
  std::string out;
  char buf[64];
  auto term = [&](double c, const char* fn, int k) {
    if (c == 0.0) return;
    if (!out.empty()) {
      out += c < 0.0 ? " - " : " + ";
      c = std::abs(c);
    }
    if (!fn) {
      std::snprintf(buf, sizeof buf, "%.17g", c);
    } else if (k == 1) {
      std::snprintf(buf, sizeof buf, "%.17g*%s(x)", c, fn);
    } else {
      std::snprintf(buf, sizeof buf, "%.17g*%s(%d*x)", c, fn, k);
    }
    out += buf;
  };
  term(t.cos_coeff(0), nullptr, 0);
  for (int k = 1; k <= t.degree(); ++k) {
    term(t.cos_coeff(k), "cos", k);
    term(t.sin_coeff(k), "sin", k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace circlering
