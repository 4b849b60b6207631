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

#include "splitcourant/bigbracket.hpp"

#include <bit>
#include <string>

#include "splitcourant/error.hpp"

namespace splitcourant {

namespace {

// Odd derivatives on a single bit. The right derivative moves the factor to
// the end, the left derivative to the front.
int right_odd_sign(std::uint32_t mask, int bit) {
  return (std::popcount(bit >= 31 ? 0u : (mask >> (bit + 1))) & 1) ? -1 : 1;
}

int left_odd_sign(std::uint32_t mask, int bit) {
  return (std::popcount(mask & ((1u << bit) - 1u)) & 1) ? -1 : 1;
}

void accumulate(Superfunction& out, const Monomial& a, const Monomial& b, const Rational& c) {
  Monomial m;
  const int s = Monomial::multiply(a, b, m);
  if (s == 0) return;
  out.add_term(m, s > 0 ? c : Rational(-c));
}

void bracket_monomials(Superfunction& out, const Monomial& mf, const Rational& cf,
                       const Monomial& mg, const Rational& cg, int n, int d) {
  for (int i = 1; i <= n; ++i) {
    // d_p F * d_x G
    if (const int ep = mf.p_exponent(i), ex = mg.x_exponent(i); ep > 0 && ex > 0) {
      Monomial a = mf;
      a.set_p_exponent(i, ep - 1);
      Monomial b = mg;
      b.set_x_exponent(i, ex - 1);
      accumulate(out, a, b, cf * cg * (ep * ex));
    }
    // - d_x F * d_p G
    if (const int ex = mf.x_exponent(i), ep = mg.p_exponent(i); ex > 0 && ep > 0) {
      Monomial a = mf;
      a.set_x_exponent(i, ex - 1);
      Monomial b = mg;
      b.set_p_exponent(i, ep - 1);
      accumulate(out, a, b, -cf * cg * (ep * ex));
    }
  }
  const std::uint32_t of = mf.odd_mask();
  const std::uint32_t og = mg.odd_mask();
  if (of == 0 || og == 0) return;
  for (int a = 0; a < d; ++a) {
    const int xi = a;
    const int th = d + a;
    // d_th F * d_xi G  +  d_xi F * d_th G
    for (auto [bf, bg] : {std::pair{th, xi}, std::pair{xi, th}}) {
      if (!((of >> bf) & 1u) || !((og >> bg) & 1u)) continue;
      const int sign = right_odd_sign(of, bf) * left_odd_sign(og, bg);
      Monomial ma = mf;
      ma.set_odd_mask(of & ~(1u << bf));
      Monomial mb = mg;
      mb.set_odd_mask(og & ~(1u << bg));
      accumulate(out, ma, mb, sign > 0 ? Rational(cf * cg) : Rational(-cf * cg));
    }
  }
}

}  // namespace

Superfunction bracket(const Superfunction& f, const Superfunction& g) {
  require_same_dims(f.dims(), g.dims());
  Superfunction out(f.dims());
  const auto [n, d] = f.dims();
  for (const auto& [mf, cf] : f.terms()) {
    if (mf.is_constant()) continue;
    for (const auto& [mg, cg] : g.terms()) {
      if (mg.is_constant()) continue;
      bracket_monomials(out, mf, cf, mg, cg, n, d);
    }
  }
  return out;
}

Superfunction nested_bracket(const Superfunction& f, std::span<const Superfunction> args) {
  Superfunction r = f;
  for (const auto& a : args) {
    if (r.is_zero()) {
      require_same_dims(f.dims(), a.dims());
      continue;
    }
    r = bracket(r, a);
  }
  return r;
}

Superfunction nested_bracket(const Superfunction& f, std::initializer_list<Superfunction> args) {
  return nested_bracket(f, std::span<const Superfunction>(args.begin(), args.size()));
}

Superfunction exp_adjoint(const Superfunction& s, const Superfunction& f, int max_order) {
  if (max_order < 1) throw PreconditionError("max_order must be positive");
  Superfunction total = f;
  Superfunction term = f;
  for (int k = 1; !term.is_zero(); ++k) {
    term = bracket(s, term);
    if (term.is_zero()) break;
    if (k > max_order) {
      throw PreconditionError("adjoint series did not terminate within order " +
                              std::to_string(max_order));
    }
    term *= Rational(1, k);
    total += term;
  }
  return total;
}

}  // namespace splitcourant
