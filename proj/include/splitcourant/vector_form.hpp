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

// Pointwise symmetric vector-valued forms on L = Gamma(wedge A)[2] (functions
// of bidegree (k,0)) or on its dual counterpart Gamma(wedge A*)[2] (bidegree
// (0,l)). An element of wedge^{q+2} has shifted degree q; Koszul signs use its
// parity.

#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "splitcourant/superfunction.hpp"

namespace splitcourant {

enum class Grading { L, LDual };

bool in_space(const Superfunction& f, Grading grading);
// Throws DegreeError naming `what` if f has a term outside the space.
void require_in_space(const Superfunction& f, Grading grading, const char* what);

int shifted_degree(const Monomial& m, int d, Grading grading);
// Homogeneous pieces keyed by shifted degree.
std::map<int, Superfunction> split_shifted(const Superfunction& f, Grading grading);

// Evaluated only on shifted-homogeneous arguments.
using Kernel = std::function<Superfunction(std::span<const Superfunction>)>;

class VectorForm {
 public:
  VectorForm() = default;
  VectorForm(Dims dims, int degree, Grading grading = Grading::L);

  Dims dims() const { return dims_; }
  int degree() const { return degree_; }
  Grading grading() const { return grading_; }

  void add(int arity, Kernel kernel, const Rational& scale = Rational(1));
  // Adds scale * other, which must have the same dims, degree and grading.
  void add(const VectorForm& other, const Rational& scale = Rational(1));

  std::vector<int> arities() const;
  bool has_arity(int arity) const { return kernels_.count(arity) != 0; }
  int max_arity() const { return kernels_.empty() ? -1 : kernels_.rbegin()->first; }
  VectorForm component(int arity) const;

  // The arity-args.size() component, expanded multilinearly over the
  // homogeneous pieces of the arguments. Arguments must lie in the space.
  Superfunction operator()(std::span<const Superfunction> args) const;
  Superfunction operator()(std::initializer_list<Superfunction> args) const {
    return (*this)(std::span<const Superfunction>(args.begin(), args.size()));
  }
  // Same, for already homogeneous and validated arguments.
  Superfunction evaluate_homogeneous(std::span<const Superfunction> args) const;

 private:
  Dims dims_;
  int degree_ = 0;
  Grading grading_ = Grading::L;
  std::map<int, std::vector<std::pair<Rational, Kernel>>> kernels_;
};

// Koszul sign of moving the arguments listed in `front` (increasing) ahead of
// the rest, for arguments of the given parities.
int unshuffle_sign(std::span<const int> parities, std::uint32_t front_mask);

// Masks of size-k subsets of {0..m-1} in increasing numeric order.
std::vector<std::uint32_t> unshuffles(int m, int k);

// i_K H.
VectorForm insert(const VectorForm& k, const VectorForm& h);
// [K,H] = i_K H - (-1)^{K H} i_H K.
VectorForm rn_pointwise(const VectorForm& k, const VectorForm& h);

}  // namespace splitcourant
