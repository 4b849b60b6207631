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

#include "splitcourant/superfunction.hpp"

#include <bit>
#include <string>

#include "splitcourant/error.hpp"

namespace splitcourant {

void require_same_dims(Dims a, Dims b) {
  if (a != b) {
    throw DimensionMismatch("dimension mismatch: (" + std::to_string(a.n) + "," +
                            std::to_string(a.d) + ") vs (" + std::to_string(b.n) + "," +
                            std::to_string(b.d) + ")");
  }
}

Bidegree bidegree_of(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::X: return {0, 0};
    case GeneratorKind::P: return {1, 1};
    case GeneratorKind::Xi: return {0, 1};
    case GeneratorKind::Theta: return {1, 0};
  }
  return {0, 0};
}

namespace {

std::uint8_t checked_exponent(int e) {
  if (e < 0 || e > 255) throw DegreeError("exponent out of range: " + std::to_string(e));
  return static_cast<std::uint8_t>(e);
}

void check_generator(Dims dims, Generator g) {
  const int bound = g.is_odd() ? dims.d : dims.n;
  if (g.index < 1 || g.index > bound) {
    throw DimensionMismatch("generator index " + std::to_string(g.index) +
                            " out of range for dimension " + std::to_string(bound));
  }
}

}  // namespace

void Monomial::set_x_exponent(int i, int e) { exponents_[i - 1] = checked_exponent(e); }

void Monomial::set_p_exponent(int i, int e) {
  exponents_[kMaxBaseDim + i - 1] = checked_exponent(e);
}

Bidegree Monomial::bidegree(int d) const {
  int p = 0;
  for (int i = 0; i < kMaxBaseDim; ++i) p += exponents_[kMaxBaseDim + i];
  const std::uint32_t xi_mask = d == 0 ? 0u : ((1u << d) - 1u);
  const int xi = std::popcount(odd_ & xi_mask);
  const int th = std::popcount(odd_ & ~xi_mask);
  return {p + th, p + xi};
}

int Monomial::odd_count() const { return std::popcount(odd_); }

bool Monomial::is_constant() const {
  if (odd_ != 0) return false;
  for (auto e : exponents_) {
    if (e != 0) return false;
  }
  return true;
}

int Monomial::multiply(const Monomial& a, const Monomial& b, Monomial& out) {
  if (a.odd_ & b.odd_) return 0;
  // Moving each odd factor of b left past the odd factors of a that sit
  // above it in canonical order.
  int swaps = 0;
  for (std::uint32_t rest = b.odd_; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    const std::uint32_t above = j >= 31 ? 0u : (~0u << (j + 1));
    swaps += std::popcount(a.odd_ & above);
  }
  for (int i = 0; i < 2 * kMaxBaseDim; ++i) {
    const int e = a.exponents_[i] + b.exponents_[i];
    if (e > 255) throw DegreeError("exponent overflow in product");
    out.exponents_[i] = static_cast<std::uint8_t>(e);
  }
  out.odd_ = a.odd_ | b.odd_;
  return (swaps & 1) ? -1 : 1;
}

Superfunction::Superfunction(Dims dims) : dims_(dims) {
  if (dims.n < 0 || dims.n > kMaxBaseDim || dims.d < 0 || dims.d > kMaxFiberDim) {
    throw DimensionMismatch("unsupported dimensions (" + std::to_string(dims.n) + "," +
                            std::to_string(dims.d) + "); n and d must lie in [0," +
                            std::to_string(kMaxBaseDim) + "]");
  }
}

Superfunction Superfunction::scalar(Dims dims, const Rational& value) {
  Superfunction f(dims);
  f.add_term(Monomial{}, value);
  return f;
}

Superfunction Superfunction::generator(Dims dims, Generator g) {
  return from_monomial(dims, Rational(1), {g});
}

Superfunction Superfunction::from_monomial(Dims dims, const Rational& coefficient,
                                           std::span<const Generator> factors) {
  Superfunction f(dims);
  Monomial m;
  int sign = 1;
  for (const Generator& g : factors) {
    check_generator(dims, g);
    Monomial single;
    switch (g.kind) {
      case GeneratorKind::X: single.set_x_exponent(g.index, 1); break;
      case GeneratorKind::P: single.set_p_exponent(g.index, 1); break;
      case GeneratorKind::Xi: single.set_odd_mask(1u << (g.index - 1)); break;
      case GeneratorKind::Theta: single.set_odd_mask(1u << (dims.d + g.index - 1)); break;
    }
    Monomial next;
    const int s = Monomial::multiply(m, single, next);
    if (s == 0) return f;
    sign *= s;
    m = next;
  }
  f.add_term(m, sign > 0 ? coefficient : Rational(-coefficient));
  return f;
}

Superfunction Superfunction::from_monomial(Dims dims, const Rational& coefficient,
                                           std::initializer_list<Generator> factors) {
  return from_monomial(dims, coefficient,
                       std::span<const Generator>(factors.begin(), factors.size()));
}

void Superfunction::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Superfunction& Superfunction::operator+=(const Superfunction& other) {
  require_same_dims(dims_, other.dims_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Superfunction& Superfunction::operator-=(const Superfunction& other) {
  require_same_dims(dims_, other.dims_);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Superfunction& Superfunction::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Superfunction Superfunction::operator-() const {
  Superfunction r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

std::map<Bidegree, Superfunction> Superfunction::bidegree_split() const {
  std::map<Bidegree, Superfunction> out;
  for (const auto& [m, c] : terms_) {
    auto [it, inserted] = out.try_emplace(m.bidegree(dims_.d), dims_);
    it->second.terms_.emplace(m, c);
  }
  return out;
}

Superfunction Superfunction::component(Bidegree b) const {
  Superfunction out(dims_);
  for (const auto& [m, c] : terms_) {
    if (m.bidegree(dims_.d) == b) out.terms_.emplace(m, c);
  }
  return out;
}

std::optional<Bidegree> Superfunction::homogeneous_bidegree() const {
  std::optional<Bidegree> b;
  for (const auto& [m, c] : terms_) {
    const Bidegree mb = m.bidegree(dims_.d);
    if (b && *b != mb) return std::nullopt;
    b = mb;
  }
  return b;
}

std::optional<int> Superfunction::total_degree() const {
  std::optional<int> t;
  for (const auto& [m, c] : terms_) {
    const int mt = m.bidegree(dims_.d).total();
    if (t && *t != mt) return std::nullopt;
    t = mt;
  }
  return t;
}

bool Superfunction::has_total_degree(int t) const {
  for (const auto& [m, c] : terms_) {
    if (m.bidegree(dims_.d).total() != t) return false;
  }
  return true;
}

std::map<int, Superfunction> Superfunction::split_by_theta_count() const {
  std::map<int, Superfunction> out;
  const std::uint32_t xi_mask = dims_.d == 0 ? 0u : ((1u << dims_.d) - 1u);
  for (const auto& [m, c] : terms_) {
    const int count = std::popcount(m.odd_mask() & ~xi_mask);
    out.try_emplace(count, dims_).first->second.terms_.emplace(m, c);
  }
  return out;
}

std::map<int, Superfunction> Superfunction::split_by_xi_count() const {
  std::map<int, Superfunction> out;
  const std::uint32_t xi_mask = dims_.d == 0 ? 0u : ((1u << dims_.d) - 1u);
  for (const auto& [m, c] : terms_) {
    const int count = std::popcount(m.odd_mask() & xi_mask);
    out.try_emplace(count, dims_).first->second.terms_.emplace(m, c);
  }
  return out;
}

Superfunction multiply(const Superfunction& f, const Superfunction& g) {
  require_same_dims(f.dims(), g.dims());
  Superfunction out(f.dims());
  Monomial m;
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) {
      const int s = Monomial::multiply(mf, mg, m);
      if (s == 0) continue;
      Rational c = cf * cg;
      if (s < 0) c = -c;
      out.add_term(m, c);
    }
  }
  return out;
}

Superfunction sum(std::span<const Superfunction> terms) {
  if (terms.empty()) return Superfunction();
  Superfunction out(terms.front().dims());
  for (const auto& t : terms) out += t;
  return out;
}

}  // namespace splitcourant
