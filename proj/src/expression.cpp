/*
 Copyright 2026 The splitcourant Authors
 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#include "splitcourant/expression.hpp"

#include <cctype>

#include "splitcourant/error.hpp"

namespace splitcourant {

namespace {

class Parser {
 public:
  Parser(std::string_view src, Dims dims, const Bindings* bindings, SourcePosition where)
      : src_(src), dims_(dims), bindings_(bindings), where_(where) {}

  Superfunction parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Superfunction f = expr();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return f;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
    throw ParseError(msg, where_.line, where_.column + static_cast<int>(pos));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    skip_space();
    return true;
  }

  unsigned long integer() {
    const std::size_t start = pos_;
    unsigned long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > 100000000UL) fail_at(start, "integer too large");
      v = v * 10 + static_cast<unsigned long>(peek() - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  // Arbitrary-length integer literal as text.
  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    return std::string(src_.substr(start, pos_ - start));
  }

  Superfunction expr() {
    Superfunction total(dims_);
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    for (;;) {
      Superfunction t = term();
      if (negative) {
        total -= t;
      } else {
        total += t;
      }
      skip_space();
      if (accept('+')) {
        negative = false;
      } else if (accept('-')) {
        negative = true;
      } else {
        return total;
      }
    }
  }

  bool starts_factor() const {
    const char c = peek();
    return c == 'x' || c == 'p' || c == 't' || c == '(' || c == '$';
  }

  Superfunction term() {
    skip_space();
    Rational coeff(1);
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      std::string num = digits();
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        std::string den = digits();
        if (den.find_first_not_of('0') == std::string::npos) fail_at(start, "zero denominator");
        coeff = Rational(num + "/" + den);
        coeff.canonicalize();
      } else {
        coeff = Rational(num);
      }
      any = true;
    }
    Superfunction product = Superfunction::scalar(dims_, coeff);
    for (;;) {
      skip_space();
      if (peek() == '*') {
        if (!any) fail("expected a coefficient or factor before '*'");
        ++pos_;
        skip_space();
        if (!starts_factor()) fail("expected a factor after '*'");
      } else if (!starts_factor()) {
        break;
      }
      product = product * factor();
      any = true;
    }
    if (!any) {
      if (at_end()) fail("unexpected end of expression");
      if (std::isalpha(static_cast<unsigned char>(peek()))) fail("unknown generator");
      fail(std::string("unexpected '") + peek() + "'");
    }
    return product;
  }

  Superfunction factor() {
    skip_space();
    const std::size_t start = pos_;
    if (accept('(')) {
      Superfunction inner = expr();
      if (!accept(')')) fail("expected ')'");
      if (peek() == '^') fail("'^' applies only to x and p");
      return inner;
    }
    if (peek() == '$') {
      ++pos_;
      const std::size_t name_start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      const std::string_view name = src_.substr(name_start, pos_ - name_start);
      if (name.empty()) fail_at(start, "expected a binding name after '$'");
      if (!bindings_) fail_at(start, "binding references are not available here");
      auto it = bindings_->find(name);
      if (it == bindings_->end()) fail_at(start, "unknown binding '" + std::string(name) + "'");
      if (it->second.dims() != dims_) fail_at(start, "binding has different dimensions");
      return it->second;
    }
    GeneratorKind kind;
    if (src_.substr(pos_, 2) == "xi") {
      kind = GeneratorKind::Xi;
      pos_ += 2;
    } else if (src_.substr(pos_, 2) == "th") {
      kind = GeneratorKind::Theta;
      pos_ += 2;
    } else if (peek() == 'x') {
      kind = GeneratorKind::X;
      ++pos_;
    } else if (peek() == 'p') {
      kind = GeneratorKind::P;
      ++pos_;
    } else {
      fail("unknown generator");
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail_at(start, "unknown generator");
    const unsigned long index = integer();
    const bool odd = kind == GeneratorKind::Xi || kind == GeneratorKind::Theta;
    const int bound = odd ? dims_.d : dims_.n;
    if (index < 1 || index > static_cast<unsigned long>(bound)) {
      fail_at(start, "generator index " + std::to_string(index) + " out of range (bound " +
                         std::to_string(bound) + ")");
    }
    const Generator g{kind, static_cast<int>(index)};
    skip_space();
    if (peek() != '^') return Superfunction::generator(dims_, g);
    if (odd) fail("'^' applies only to x and p");
    ++pos_;
    skip_space();
    const std::size_t exp_pos = pos_;
    const unsigned long e = integer();
    if (e < 1) fail_at(exp_pos, "exponent must be positive");
    if (e > 255) fail_at(exp_pos, "exponent too large");
    Superfunction f(dims_);
    Monomial m;
    if (kind == GeneratorKind::X) {
      m.set_x_exponent(g.index, static_cast<int>(e));
    } else {
      m.set_p_exponent(g.index, static_cast<int>(e));
    }
    f.add_term(m, Rational(1));
    return f;
  }

  std::string_view src_;
  Dims dims_;
  const Bindings* bindings_;
  SourcePosition where_;
  std::size_t pos_ = 0;
};

void append_monomial(std::string& out, const Monomial& m, Dims dims) {
  bool first = true;
  auto sep = [&] {
    if (!first) out += '*';
    first = false;
  };
  for (int i = 1; i <= dims.n; ++i) {
    if (const int e = m.x_exponent(i)) {
      sep();
      out += "x" + std::to_string(i);
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  for (int i = 1; i <= dims.n; ++i) {
    if (const int e = m.p_exponent(i)) {
      sep();
      out += "p" + std::to_string(i);
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  for (int t = 0; t < 2 * dims.d; ++t) {
    if (!((m.odd_mask() >> t) & 1u)) continue;
    sep();
    out += t < dims.d ? "xi" + std::to_string(t + 1) : "th" + std::to_string(t - dims.d + 1);
  }
}

}  // namespace

Superfunction parse_expression(std::string_view src, Dims dims, const Bindings* bindings,
                               SourcePosition where) {
  return Parser(src, dims, bindings, where).parse();
}

std::string render(const Superfunction& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(c);
    if (m.is_constant()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      append_monomial(out, m, f.dims());
    }
  }
  return out;
}

}  // namespace splitcourant
