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

#pragma once

// Exact sparse arithmetic in the bigraded supercommutative algebra of
// polynomial functions on T*[2]A[1], A = R^n x R^d -> R^n.
//
// Coordinates and their bidegrees:
//   x_i   (0,0)  even     p^i   (1,1)  even
//   xi_a  (0,1)  odd      th^a  (1,0)  odd
//
// Normal form: the even part is an exponent vector, the odd part a strictly
// increasing product under x_1 < ... < x_n < p^1 < ... < p^n < xi_1 < ... <
// xi_d < th^1 < ... < th^d. Coefficients are exact rationals.

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace splitcourant {

using Rational = mpq_class;

inline constexpr int kMaxBaseDim = 8;
inline constexpr int kMaxFiberDim = 8;

struct Dims {
  int n = 0;  // base dimension
  int d = 0;  // fiber dimension

  friend auto operator<=>(const Dims&, const Dims&) = default;
};

// Throws DimensionMismatch unless both are equal.
void require_same_dims(Dims a, Dims b);

enum class GeneratorKind { X, P, Xi, Theta };

struct Generator {
  GeneratorKind kind;
  int index;  // 1-based

  static Generator x(int i) { return {GeneratorKind::X, i}; }
  static Generator p(int i) { return {GeneratorKind::P, i}; }
  static Generator xi(int a) { return {GeneratorKind::Xi, a}; }
  static Generator theta(int a) { return {GeneratorKind::Theta, a}; }

  bool is_odd() const { return kind == GeneratorKind::Xi || kind == GeneratorKind::Theta; }

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

struct Bidegree {
  int k = 0;
  int l = 0;

  int total() const { return k + l; }

  friend Bidegree operator+(Bidegree a, Bidegree b) { return {a.k + b.k, a.l + b.l}; }
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

Bidegree bidegree_of(GeneratorKind kind);

// Generator content of one term. Odd generators are stored as a bit mask:
// bit a-1 is xi_a, bit d+a-1 is th^a, so increasing bit order is the
// canonical odd order.
class Monomial {
 public:
  Monomial() = default;

  std::uint8_t x_exponent(int i) const { return exponents_[i - 1]; }
  std::uint8_t p_exponent(int i) const { return exponents_[kMaxBaseDim + i - 1]; }
  std::uint32_t odd_mask() const { return odd_; }

  bool has_xi(int a) const { return (odd_ >> (a - 1)) & 1u; }
  bool has_theta(int a, int d) const { return (odd_ >> (d + a - 1)) & 1u; }

  void set_x_exponent(int i, int e);
  void set_p_exponent(int i, int e);
  void set_odd_mask(std::uint32_t mask) { odd_ = mask; }

  Bidegree bidegree(int d) const;
  int odd_count() const;
  bool is_constant() const;

  // Product a*b in normal form. Returns the sign of the reordering, or 0
  // when an odd generator repeats.
  static int multiply(const Monomial& a, const Monomial& b, Monomial& out);

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint8_t, 2 * kMaxBaseDim> exponents_{};
  std::uint32_t odd_ = 0;
};

class Superfunction {
 public:
  using Terms = std::map<Monomial, Rational>;

  Superfunction() = default;
  explicit Superfunction(Dims dims);

  static Superfunction scalar(Dims dims, const Rational& value);
  static Superfunction generator(Dims dims, Generator g);
  // coefficient * f_1 * f_2 * ... in the given order (signs from reordering;
  // zero when an odd generator repeats).
  static Superfunction from_monomial(Dims dims, const Rational& coefficient,
                                     std::span<const Generator> factors);
  static Superfunction from_monomial(Dims dims, const Rational& coefficient,
                                     std::initializer_list<Generator> factors);

  Dims dims() const { return dims_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Adds c * m; drops the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  Superfunction& operator+=(const Superfunction& other);
  Superfunction& operator-=(const Superfunction& other);
  Superfunction& operator*=(const Rational& c);

  friend Superfunction operator+(Superfunction a, const Superfunction& b) { return a += b; }
  friend Superfunction operator-(Superfunction a, const Superfunction& b) { return a -= b; }
  friend Superfunction operator*(Superfunction a, const Rational& c) { return a *= c; }
  friend Superfunction operator*(const Rational& c, Superfunction a) { return a *= c; }
  Superfunction operator-() const;

  friend bool operator==(const Superfunction& a, const Superfunction& b) {
    return a.dims_ == b.dims_ && a.terms_ == b.terms_;
  }

  // Bidegree-homogeneous pieces; empty map for zero.
  std::map<Bidegree, Superfunction> bidegree_split() const;
  Superfunction component(Bidegree b) const;
  // The common bidegree of all terms, if there is one (none for zero).
  std::optional<Bidegree> homogeneous_bidegree() const;
  // The common total degree of all terms, if there is one (none for zero).
  std::optional<int> total_degree() const;
  // True when every term has total degree t (vacuously true for zero).
  bool has_total_degree(int t) const;
  // Pieces split by number of th (first bidegree component) or xi.
  std::map<int, Superfunction> split_by_theta_count() const;
  std::map<int, Superfunction> split_by_xi_count() const;

 private:
  Dims dims_;
  Terms terms_;
};

// Supercommutative product.
Superfunction multiply(const Superfunction& f, const Superfunction& g);
inline Superfunction operator*(const Superfunction& f, const Superfunction& g) {
  return multiply(f, g);
}

inline std::map<Bidegree, Superfunction> bidegree_split(const Superfunction& f) {
  return f.bidegree_split();
}

Superfunction sum(std::span<const Superfunction> terms);

}  // namespace splitcourant
