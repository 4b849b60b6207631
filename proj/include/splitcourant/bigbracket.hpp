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

// The big bracket: the graded Poisson bracket of bidegree (-1,-1) on the
// functions of T*[2]A[1], determined by
//   {p^i, x_j} = delta_ij,   {th^a, xi_b} = delta_ab,
// graded symmetry {F,G} = -(-1)^{fg} {G,F} and the Leibniz rule
// {F, GH} = {F,G} H + (-1)^{fg} G {F,H}, with f, g total degrees.

#include <span>

#include "splitcourant/superfunction.hpp"

namespace splitcourant {

Superfunction bracket(const Superfunction& f, const Superfunction& g);

// {...{{f, a_1}, a_2} ..., a_k}
Superfunction nested_bracket(const Superfunction& f, std::span<const Superfunction> args);
Superfunction nested_bracket(const Superfunction& f, std::initializer_list<Superfunction> args);

inline constexpr int kDefaultMaxOrder = 8;

// sum_k (1/k!) ad_s^k f, stopping at the first vanishing term. Throws
// PreconditionError if a term of order > max_order is still nonzero.
Superfunction exp_adjoint(const Superfunction& s, const Superfunction& f,
                          int max_order = kDefaultMaxOrder);

}  // namespace splitcourant
