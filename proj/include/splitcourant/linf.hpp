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

// Symmetric vector-valued forms on L = Gamma(wedge A)[2] built from the big
// bracket, the correspondence Theta <-> l = l_0 + l_1 + l_2 + l_3, the
// degree-zero forms attached to skew endomorphisms, the Richardson-Nijenhuis
// calculus and the checks built on it.

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "splitcourant/courant.hpp"
#include "splitcourant/tuples.hpp"
#include "splitcourant/vector_form.hpp"

namespace splitcourant {

// (P_1..P_k) -> sign * {...{generator, P_1}..., P_k}
struct DerivedAtom {
  Superfunction generator;
  int arity = 0;
  Rational sign{1};
};

// P -> scale * p * P for P of shifted degree p.
struct EulerAtom {
  Rational scale{1};
};

using SymFormAtom = std::variant<DerivedAtom, EulerAtom>;

class SymFormFamily {
 public:
  SymFormFamily() = default;
  SymFormFamily(Dims dims, int degree, Grading grading = Grading::L);

  Dims dims() const { return dims_; }
  int degree() const { return degree_; }
  Grading grading() const { return grading_; }
  const std::map<int, std::vector<SymFormAtom>>& by_arity() const { return by_arity_; }
  bool empty() const { return by_arity_.empty(); }

  // Zero generators and zero scales are dropped.
  void add_derived(const Superfunction& generator, int arity, const Rational& sign = Rational(1));
  void add_euler(const Rational& scale);
  void add(const SymFormFamily& other);

  SymFormFamily component(int arity) const;
  VectorForm pointwise() const;

  Superfunction operator()(std::span<const Superfunction> args) const {
    return pointwise()(args);
  }
  Superfunction operator()(std::initializer_list<Superfunction> args) const {
    return pointwise()(args);
  }

  // Theta with l = M(Theta) (or lambda of Theta on the dual space), when the
  // family has that shape.
  std::optional<Superfunction> m_source() const;
  // J with this family = Upsilon(J), when it has that shape.
  std::optional<Superfunction> upsilon_source() const;

 private:
  Dims dims_;
  int degree_ = 0;
  Grading grading_ = Grading::L;
  std::map<int, std::vector<SymFormAtom>> by_arity_;
};

// l_0 = psi, l_1 = {gamma,.}, l_2 = {{mu,.},.}, l_3 = {{{phi,.},.},.}.
SymFormFamily map_M(const CourantStructure& cs);
// lambda_0 = phi, lambda_1 = {mu,.}, lambda_2 = {{gamma,.},.}, lambda_3 from psi,
// on Gamma(wedge A*)[2].
SymFormFamily dual_lambda(const CourantStructure& cs);
// j_0 = -pi, j_1 = {-N,.}, j_2 = {{-omega,.},.}.
SymFormFamily map_upsilon(const SkewEndo& j);
// scale * Euler map.
SymFormFamily euler(Dims dims, const Rational& scale = Rational(1));
// The extension of V in F^{l,k} (no p) as a k-form with sign
// (-1)^{kl - k(k-1)/2} and degree k + l - 2.
SymFormFamily extend_tensor(const Superfunction& v, int arity);

// The function F of bidegree (.,m) whose derived m-form {...{F,X_1}...,X_m}
// agrees with the arity-m component of `form` on generators.
Superfunction reduce_derived(const VectorForm& form, int arity);

// First tuple on which a and b differ, as (tuple, a - b).
struct FormDefect {
  Tuple tuple;
  Superfunction defect;
};
std::optional<FormDefect> compare_forms(const VectorForm& a, const VectorForm& b,
                                        const TupleSet& tuples, int max_arity);

// Throws RepresentationError if l is not M of a pre-Courant structure.
CourantStructure map_M_inverse(const VectorForm& l, const TupleSet& tuples);
// Throws RepresentationError if j is not Upsilon of a skew endomorphism.
SkewEndo map_upsilon_inverse(const VectorForm& j, const TupleSet& tuples);

struct RnResult {
  VectorForm pointwise;
  std::optional<SymFormFamily> symbolic;
};

VectorForm insert(const SymFormFamily& k, const SymFormFamily& h);
// [K,H]; the symbolic family is present for Upsilon/M atom pairs and pairs
// involving Euler atoms.
RnResult rn_bracket(const SymFormFamily& k, const SymFormFamily& h);

struct JacobiEntry {
  int n = 0;
  bool pass = true;
  bool vacuous = false;
  bool pointwise_pass = true;
  std::optional<bool> symbolic_pass;
  std::size_t tuples_checked = 0;
  Superfunction defect;      // pointwise defect on the first failing tuple
  Tuple failing_tuple;
  std::string criterion;     // symbolic criterion, if any
  Superfunction symbolic_defect;
};

struct JacobiReport {
  std::vector<JacobiEntry> entries;
  bool pass = true;
  std::optional<int> first_failure;
};

// Arity-n component of i_l l.
VectorForm jacobi_component(const VectorForm& l, int n);

JacobiReport gen_jacobi_check(const VectorForm& l, int n_max, const TupleSet& tuples);
// Adds the symbolic criterion for M-shaped families; n = 5 is then vacuous.
JacobiReport gen_jacobi_check(const SymFormFamily& l, int n_max, const TupleSet& tuples);

struct NijenhuisFormReport {
  bool pass = true;
  bool square_ok = true;   // [n,[n,l]] = [k,l]
  bool commute_ok = true;  // [n,k] = 0
  Superfunction reduced_defect;  // reduction of [n,[n,l]] - [k,l]
  std::optional<FormDefect> defect;
  std::string failed;
};

NijenhuisFormReport nijenhuis_form_check(const SymFormFamily& n, const SymFormFamily& l,
                                         const SymFormFamily& k, const TupleSet& tuples);

// sum_k (-1)^k / k! l_k(pi, ..., pi).
Superfunction maurer_cartan_check(const VectorForm& l, const Superfunction& pi);
Superfunction maurer_cartan_check(const SymFormFamily& l, const Superfunction& pi);

// (e^pi l)_m = sum_{k >= m} (-1)^{k-m} / (k-m)! l_k(pi^{k-m}, .).
VectorForm twist_linf(const VectorForm& l, const Superfunction& pi);
VectorForm twist_linf(const SymFormFamily& l, const Superfunction& pi);

}  // namespace splitcourant
