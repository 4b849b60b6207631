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

// Pre-Courant structures on A + A*: a degree-3 function Theta with
//   Theta = psi + gamma + mu + phi  in  F^{3,0} + F^{2,1} + F^{1,2} + F^{0,3},
// the derived anchor and Dorfman bracket, deformation by skew endomorphisms,
// Nijenhuis torsion and twisting by bivectors or 2-forms.

#include <array>
#include <optional>
#include <string_view>

#include "splitcourant/bigbracket.hpp"
#include "splitcourant/superfunction.hpp"

namespace splitcourant {

struct CourantStructure {
  Superfunction theta;
  Superfunction psi;
  Superfunction gamma;
  Superfunction mu;
  Superfunction phi;

  Dims dims() const { return theta.dims(); }
};

// Throws DegreeError unless every term of theta has total degree 3.
CourantStructure decompose(const Superfunction& theta);

// J = pi + N + omega in F^{2,0} + F^{1,1} + F^{0,2}, acting by J(u) = {u, j}.
struct SkewEndo {
  Superfunction pi;
  Superfunction nn;
  Superfunction omega;
  Superfunction j;

  Dims dims() const { return j.dims(); }
  Superfunction apply(const Superfunction& u) const { return bracket(u, j); }

  // Throws DegreeError for terms of total degree != 2 or terms containing p.
  static SkewEndo from_function(const Superfunction& j);
  static SkewEndo from_parts(const Superfunction& pi, const Superfunction& nn,
                             const Superfunction& omega);
};

struct IntegrabilityReport {
  static constexpr std::array<std::string_view, 5> kComponentNames = {
      "{gamma,psi}", "{gamma,gamma}+2{mu,psi}", "{mu,gamma}+{psi,phi}",
      "{mu,mu}+2{gamma,phi}", "{mu,phi}"};
  static constexpr std::array<Bidegree, 5> kComponentBidegrees = {
      Bidegree{4, 0}, Bidegree{3, 1}, Bidegree{2, 2}, Bidegree{1, 3}, Bidegree{0, 4}};

  Superfunction full;
  std::array<Superfunction, 5> components;
  bool is_courant = false;
};

// Throws Error if the five component expressions disagree with the
// bidegree split of {Theta, Theta}.
IntegrabilityReport integrability(const CourantStructure& cs);

Superfunction anchor_apply(const CourantStructure& cs, const Superfunction& u,
                           const Superfunction& f);
Superfunction dorfman(const CourantStructure& cs, const Superfunction& u,
                      const Superfunction& v);

// Theta_J = {j, Theta}.
CourantStructure deform(const CourantStructure& cs, const SkewEndo& j);

inline constexpr int kDefaultXDegree = 2;

// lambda with J^2 = lambda id, tested on th^a, xi_a and their multiples by
// x-monomials up to x_degree.
std::optional<Rational> j_square(const SkewEndo& j, int x_degree = kDefaultXDegree);

// 1/2 ((Theta_J)_J - lambda Theta). Throws PreconditionError unless
// J^2 = lambda id.
Superfunction torsion(const CourantStructure& cs, const SkewEndo& j, const Rational& lambda,
                      int x_degree = kDefaultXDegree);

// e^s Theta for s of bidegree (2,0) or (0,2). Throws DegreeError otherwise.
CourantStructure twist(const CourantStructure& cs, const Superfunction& s,
                       int max_order = kDefaultMaxOrder);

// e^pi N = N + {pi, N}.
SkewEndo twist_endo(const Superfunction& nn, const Superfunction& pi);

}  // namespace splitcourant
