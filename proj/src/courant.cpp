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

#include "splitcourant/courant.hpp"

#include <vector>

#include "splitcourant/error.hpp"
#include "splitcourant/tuples.hpp"

namespace splitcourant {

namespace {

bool has_p(const Monomial& m, int n) {
  for (int i = 1; i <= n; ++i) {
    if (m.p_exponent(i) != 0) return true;
  }
  return false;
}

}  // namespace

CourantStructure decompose(const Superfunction& theta) {
  if (!theta.has_total_degree(3)) throw DegreeError("Theta must have total degree 3");
  CourantStructure cs;
  cs.theta = theta;
  cs.psi = theta.component({3, 0});
  cs.gamma = theta.component({2, 1});
  cs.mu = theta.component({1, 2});
  cs.phi = theta.component({0, 3});
  return cs;
}

SkewEndo SkewEndo::from_function(const Superfunction& j) {
  if (!j.has_total_degree(2)) throw DegreeError("J must have total degree 2");
  for (const auto& [m, c] : j.terms()) {
    if (has_p(m, j.dims().n)) {
      throw DegreeError("J must not contain p (not a section of the exterior square)");
    }
  }
  SkewEndo s;
  s.j = j;
  s.pi = j.component({2, 0});
  s.nn = j.component({1, 1});
  s.omega = j.component({0, 2});
  return s;
}

SkewEndo SkewEndo::from_parts(const Superfunction& pi, const Superfunction& nn,
                              const Superfunction& omega) {
  require_same_dims(pi.dims(), nn.dims());
  require_same_dims(pi.dims(), omega.dims());
  SkewEndo s = from_function(pi + nn + omega);
  if (s.pi != pi || s.nn != nn || s.omega != omega) {
    throw DegreeError("pi, N, omega must have bidegrees (2,0), (1,1), (0,2)");
  }
  return s;
}

IntegrabilityReport integrability(const CourantStructure& cs) {
  IntegrabilityReport r;
  const auto& [theta, psi, gamma, mu, phi] = cs;
  const Rational two(2);
  r.components[0] = bracket(gamma, psi);
  r.components[1] = bracket(gamma, gamma) + two * bracket(mu, psi);
  r.components[2] = bracket(mu, gamma) + bracket(psi, phi);
  r.components[3] = bracket(mu, mu) + two * bracket(gamma, phi);
  r.components[4] = bracket(mu, phi);
  r.full = bracket(theta, theta);

  // {Theta,Theta} splits as 2c0 + c1 + 2c2 + c3 + 2c4.
  static constexpr std::array<int, 5> kWeights = {2, 1, 2, 1, 2};
  Superfunction recombined(cs.dims());
  for (std::size_t i = 0; i < 5; ++i) {
    if (r.components[i] != r.components[i].component(IntegrabilityReport::kComponentBidegrees[i])) {
      throw Error("integrability component has unexpected bidegree");
    }
    recombined += r.components[i] * Rational(kWeights[i]);
  }
  if (recombined != r.full) {
    throw Error("integrability components disagree with {Theta,Theta}");
  }
  r.is_courant = r.full.is_zero();
  return r;
}

Superfunction anchor_apply(const CourantStructure& cs, const Superfunction& u,
                           const Superfunction& f) {
  if (!u.has_total_degree(1)) throw DegreeError("anchor argument must have total degree 1");
  if (f.homogeneous_bidegree().value_or(Bidegree{0, 0}) != Bidegree{0, 0}) {
    throw DegreeError("anchor acts on functions of bidegree (0,0)");
  }
  return nested_bracket(u, {cs.theta, f});
}

Superfunction dorfman(const CourantStructure& cs, const Superfunction& u,
                      const Superfunction& v) {
  if (!u.has_total_degree(1) || !v.has_total_degree(1)) {
    throw DegreeError("Dorfman bracket arguments must have total degree 1");
  }
  return nested_bracket(u, {cs.theta, v});
}

CourantStructure deform(const CourantStructure& cs, const SkewEndo& j) {
  return decompose(bracket(j.j, cs.theta));
}

std::optional<Rational> j_square(const SkewEndo& j, int x_degree) {
  const Dims dims = j.dims();
  std::optional<Rational> lambda;
  for (const auto& f : x_monomials(dims, x_degree)) {
    for (int a = 1; a <= dims.d; ++a) {
      for (Generator g : {Generator::theta(a), Generator::xi(a)}) {
        const Superfunction v = f * Superfunction::generator(dims, g);
        const Superfunction jjv = j.apply(j.apply(v));
        if (!lambda) {
          const auto& [m, c] = *v.terms().begin();
          auto it = jjv.terms().find(m);
          lambda = it == jjv.terms().end() ? Rational(0) : Rational(it->second / c);
        }
        if (jjv != v * *lambda) return std::nullopt;
      }
    }
  }
  return lambda.value_or(Rational(0));
}

Superfunction torsion(const CourantStructure& cs, const SkewEndo& j, const Rational& lambda,
                      int x_degree) {
  const auto sq = j_square(j, x_degree);
  if (!sq) throw PreconditionError("J^2 is not a multiple of the identity");
  if (*sq != lambda) {
    throw PreconditionError("J^2 = " + sq->get_str() + " id, not " + lambda.get_str() + " id");
  }
  const Superfunction twice = bracket(j.j, bracket(j.j, cs.theta));
  return (twice - cs.theta * lambda) * Rational(1, 2);
}

CourantStructure twist(const CourantStructure& cs, const Superfunction& s, int max_order) {
  require_same_dims(cs.dims(), s.dims());
  if (!s.is_zero()) {
    const auto b = s.homogeneous_bidegree();
    if (!b || (*b != Bidegree{2, 0} && *b != Bidegree{0, 2})) {
      throw DegreeError("twisting function must have bidegree (2,0) or (0,2)");
    }
  }
  return decompose(exp_adjoint(s, cs.theta, max_order));
}

SkewEndo twist_endo(const Superfunction& nn, const Superfunction& pi) {
  return SkewEndo::from_function(nn + bracket(pi, nn));
}

}  // namespace splitcourant
