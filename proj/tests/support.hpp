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

// Seeded random inputs and brute-force oracles shared by the test suites.
// The oracles work on generator words and plain polynomials and do not call
// the bracket or product code under test.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "splitcourant/courant.hpp"

namespace sctest {

using namespace splitcourant;

// ---------------------------------------------------------------------------
// Random inputs

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  Rational coefficient() {
    static const int nums[] = {-3, -2, -1, 1, 2, 3};
    Rational q(nums[uniform(0, 5)], uniform(1, 2) == 1 ? 1 : 2);
    q.canonicalize();
    return q;
  }

  // One term of bidegree (k,l) with at most `max_x` factors x_i, or zero if
  // no such term exists in these dimensions.
  Superfunction term(Dims dims, Bidegree b, int max_x = 2, bool allow_p = true) {
    std::vector<int> ps;
    for (int a = 0; a <= std::min(b.k, b.l); ++a) {
      if (a > 0 && (!allow_p || dims.n == 0)) break;
      if (b.k - a <= dims.d && b.l - a <= dims.d) ps.push_back(a);
    }
    if (ps.empty()) return Superfunction(dims);
    const int np = ps[uniform(0, static_cast<int>(ps.size()) - 1)];
    std::vector<Generator> gens;
    for (int i = 0; i < np; ++i) gens.push_back(Generator::p(uniform(1, dims.n)));
    for (int a : subset(dims.d, b.k - np)) gens.push_back(Generator::theta(a));
    for (int a : subset(dims.d, b.l - np)) gens.push_back(Generator::xi(a));
    if (dims.n > 0) {
      const int nx = uniform(0, max_x);
      for (int i = 0; i < nx; ++i) gens.push_back(Generator::x(uniform(1, dims.n)));
    }
    std::shuffle(gens.begin(), gens.end(), rng_);
    return Superfunction::from_monomial(dims, coefficient(), gens);
  }

  Superfunction homogeneous(Dims dims, Bidegree b, int terms = 3, int max_x = 2,
                            bool allow_p = true) {
    Superfunction f(dims);
    for (int t = 0; t < terms; ++t) f += term(dims, b, max_x, allow_p);
    return f;
  }

  // Random Theta with all four components.
  Superfunction theta(Dims dims, int terms = 2, int max_x = 1) {
    Superfunction f(dims);
    for (Bidegree b : {Bidegree{3, 0}, Bidegree{2, 1}, Bidegree{1, 2}, Bidegree{0, 3}}) {
      f += homogeneous(dims, b, terms, max_x);
    }
    return f;
  }

  // Random element of Gamma(wedge^k A).
  Superfunction l_element(Dims dims, int k, int terms = 2, int max_x = 2) {
    return homogeneous(dims, {k, 0}, terms, max_x, false);
  }

  // Random skew endomorphism pi + N + omega.
  Superfunction endo(Dims dims, int terms = 2, int max_x = 1) {
    Superfunction f(dims);
    for (Bidegree b : {Bidegree{2, 0}, Bidegree{1, 1}, Bidegree{0, 2}}) {
      f += homogeneous(dims, b, terms, max_x, false);
    }
    return f;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::vector<int> subset(int d, int k) {
    std::vector<int> all(d);
    for (int a = 0; a < d; ++a) all[a] = a + 1;
    std::shuffle(all.begin(), all.end(), rng_);
    all.resize(std::max(0, std::min(k, d)));
    return all;
  }

  std::mt19937_64 rng_;
};

inline Superfunction gen(Dims dims, Generator g) { return Superfunction::generator(dims, g); }

// ---------------------------------------------------------------------------
// Word oracle: polynomials as maps from sorted generator words, product by
// explicit reordering and the bracket by recursive Leibniz expansion from
// the generator table.

using Word = std::vector<Generator>;
using WordPoly = std::map<Word, Rational>;

inline int degree_of(const Generator& g) {
  switch (g.kind) {
    case GeneratorKind::X:
      return 0;
    case GeneratorKind::P:
      return 2;
    default:
      return 1;
  }
}

inline int word_degree(const Word& w) {
  int s = 0;
  for (const auto& g : w) s += degree_of(g);
  return s;
}

inline int rank(const Generator& g) { return static_cast<int>(g.kind) * 64 + g.index; }

// Sorts w by bubble sort; returns the sign, or 0 if an odd generator repeats.
inline int sort_word(Word& w) {
  int sign = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j + 1 < w.size() - i; ++j) {
      if (rank(w[j]) > rank(w[j + 1])) {
        if (w[j].is_odd() && w[j + 1].is_odd()) sign = -sign;
        std::swap(w[j], w[j + 1]);
      }
    }
  }
  for (std::size_t j = 0; j + 1 < w.size(); ++j) {
    if (w[j].is_odd() && w[j] == w[j + 1]) return 0;
  }
  return sign;
}

inline void add_word(WordPoly& p, Word w, const Rational& c) {
  const int s = sort_word(w);
  if (s == 0 || c == 0) return;
  Rational& slot = p[w];
  slot += s * c;
  if (slot == 0) p.erase(w);
}

inline WordPoly word_product(const WordPoly& a, const WordPoly& b) {
  WordPoly out;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      add_word(out, w, ca * cb);
    }
  }
  return out;
}

inline WordPoly single(const Word& w, const Rational& c = Rational(1)) {
  WordPoly p;
  add_word(p, w, c);
  return p;
}

inline void add_into(WordPoly& into, const WordPoly& p, const Rational& c = Rational(1)) {
  for (const auto& [w, v] : p) {
    Rational& slot = into[w];
    slot += c * v;
    if (slot == 0) into.erase(w);
  }
}

inline Rational generator_bracket(const Generator& a, const Generator& b) {
  if (a.index != b.index) return 0;
  if (a.kind == GeneratorKind::P && b.kind == GeneratorKind::X) return 1;
  if (a.kind == GeneratorKind::X && b.kind == GeneratorKind::P) return -1;
  if (a.kind == GeneratorKind::Theta && b.kind == GeneratorKind::Xi) return 1;
  if (a.kind == GeneratorKind::Xi && b.kind == GeneratorKind::Theta) return 1;
  return 0;
}

inline WordPoly word_bracket(const Word& a, const Word& b) {
  if (a.empty() || b.empty()) return {};
  if (a.size() == 1) {
    // {a, b1 R} = {a,b1} R + (-1)^{|a||b1|} b1 {a,R}
    const Word rest(b.begin() + 1, b.end());
    WordPoly out = single(rest, generator_bracket(a[0], b[0]));
    const int s = (degree_of(a[0]) * degree_of(b[0])) % 2 ? -1 : 1;
    add_into(out, word_product(single({b[0]}), word_bracket(a, rest)), Rational(s));
    return out;
  }
  // {a1 R, B} = a1 {R,B} + (-1)^{|R||B|} {a1,B} R
  const Word head{a[0]};
  const Word rest(a.begin() + 1, a.end());
  WordPoly out = word_product(single(head), word_bracket(rest, b));
  const int s = (word_degree(rest) * word_degree(b)) % 2 ? -1 : 1;
  add_into(out, word_product(word_bracket(head, b), single(rest)), Rational(s));
  return out;
}

inline WordPoly to_words(const Superfunction& f) {
  const Dims dims = f.dims();
  WordPoly out;
  for (const auto& [m, c] : f.terms()) {
    Word w;
    for (int i = 1; i <= dims.n; ++i) {
      for (int e = 0; e < m.x_exponent(i); ++e) w.push_back(Generator::x(i));
    }
    for (int i = 1; i <= dims.n; ++i) {
      for (int e = 0; e < m.p_exponent(i); ++e) w.push_back(Generator::p(i));
    }
    for (int a = 1; a <= dims.d; ++a) {
      if (m.has_xi(a)) w.push_back(Generator::xi(a));
    }
    for (int a = 1; a <= dims.d; ++a) {
      if (m.has_theta(a, dims.d)) w.push_back(Generator::theta(a));
    }
    out.emplace(std::move(w), c);
  }
  return out;
}

// Words are already in canonical order, so no reordering sign arises here.
inline Superfunction from_words(Dims dims, const WordPoly& p) {
  Superfunction out(dims);
  for (const auto& [w, c] : p) out += Superfunction::from_monomial(dims, c, w);
  return out;
}

inline Superfunction oracle_bracket(const Superfunction& f, const Superfunction& g) {
  WordPoly out;
  for (const auto& [wf, cf] : to_words(f)) {
    for (const auto& [wg, cg] : to_words(g)) add_into(out, word_bracket(wf, wg), cf * cg);
  }
  return from_words(f.dims(), out);
}

inline Superfunction oracle_product(const Superfunction& f, const Superfunction& g) {
  return from_words(f.dims(), word_product(to_words(f), to_words(g)));
}

// ---------------------------------------------------------------------------
// Polynomials in x for the Schouten and de Rham oracles.

using Exponents = std::vector<int>;
using Poly = std::map<Exponents, Rational>;

inline void poly_add(Poly& into, const Exponents& e, const Rational& c) {
  if (c == 0) return;
  Rational& slot = into[e];
  slot += c;
  if (slot == 0) into.erase(e);
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      poly_add(out, e, ca * cb);
    }
  }
  return out;
}

inline Poly poly_diff(const Poly& a, int i) {
  Poly out;
  for (const auto& [e, c] : a) {
    if (e[i] == 0) continue;
    Exponents f = e;
    --f[i];
    poly_add(out, f, c * e[i]);
  }
  return out;
}

inline Superfunction poly_times(Dims dims, const Poly& p, std::vector<Generator> odd) {
  Superfunction out(dims);
  for (const auto& [e, c] : p) {
    std::vector<Generator> gens;
    for (int i = 0; i < dims.n; ++i) {
      for (int k = 0; k < e[i]; ++k) gens.push_back(Generator::x(i + 1));
    }
    gens.insert(gens.end(), odd.begin(), odd.end());
    out += Superfunction::from_monomial(dims, c, gens);
  }
  return out;
}

// pi = sum_{a<b} pi^{ab} th^a th^b on A = TR^n; returns the coefficient
// matrix with pi^{ba} = -pi^{ab}.
inline std::vector<std::vector<Poly>> bivector_matrix(const Superfunction& pi) {
  const Dims dims = pi.dims();
  std::vector<std::vector<Poly>> m(dims.d, std::vector<Poly>(dims.d));
  for (const auto& [mono, c] : pi.terms()) {
    std::vector<int> th;
    for (int a = 1; a <= dims.d; ++a) {
      if (mono.has_theta(a, dims.d)) th.push_back(a - 1);
    }
    Exponents e(dims.n);
    for (int i = 0; i < dims.n; ++i) e[i] = mono.x_exponent(i + 1);
    poly_add(m[th[0]][th[1]], e, c);
    poly_add(m[th[1]][th[0]], e, -c);
  }
  return m;
}

// True when the bivector satisfies the Jacobi identity
//   sum_l (pi^{il} d_l pi^{jk} + pi^{jl} d_l pi^{ki} + pi^{kl} d_l pi^{ij}) = 0.
inline bool schouten_poisson(const Superfunction& pi) {
  const auto m = bivector_matrix(pi);
  const int n = pi.dims().n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        Poly total;
        for (int l = 0; l < n; ++l) {
          for (const auto& [a, b, c] : {std::tuple{i, j, k}, std::tuple{j, k, i}, std::tuple{k, i, j}}) {
            for (const auto& [e, v] : poly_mul(m[a][l], poly_diff(m[b][c], l))) poly_add(total, e, v);
          }
        }
        if (!total.empty()) return false;
      }
    }
  }
  return true;
}

// de Rham differential of a form sum f_I xi_I on R^n (xi_i = dx_i):
// d(f dx_I) = sum_j d_j f dx_j ^ dx_I.
inline Superfunction de_rham(const Superfunction& form) {
  const Dims dims = form.dims();
  Superfunction out(dims);
  for (const auto& [mono, c] : form.terms()) {
    Exponents e(dims.n);
    for (int i = 0; i < dims.n; ++i) e[i] = mono.x_exponent(i + 1);
    std::vector<Generator> odd;
    for (int a = 1; a <= dims.d; ++a) {
      if (mono.has_xi(a)) odd.push_back(Generator::xi(a));
    }
    Poly f;
    poly_add(f, e, c);
    for (int j = 0; j < dims.n; ++j) {
      std::vector<Generator> w{Generator::xi(j + 1)};
      w.insert(w.end(), odd.begin(), odd.end());
      out += poly_times(dims, poly_diff(f, j), w);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Corpus Theta's.

inline Superfunction mu_tm(Dims dims) {
  Superfunction f(dims);
  for (int i = 1; i <= std::min(dims.n, dims.d); ++i) {
    f += Superfunction::from_monomial(dims, Rational(1), {Generator::p(i), Generator::xi(i)});
  }
  return f;
}

}  // namespace sctest
