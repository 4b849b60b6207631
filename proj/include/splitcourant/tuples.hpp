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

// Finite argument sets on which pointwise forms are compared.
//
// Arity-m tuples are multisets of the generators {x_i, th^a} (or {x_i, xi_a}
// on the dual space), all of them when there are at most
// max_generator_tuples, otherwise a seeded sample, followed by extra tuples
// that mix in products: x-monomials times odd generators, wedges of two odd
// generators, x-monomials and 1.

#include <cstdint>
#include <vector>

#include "splitcourant/superfunction.hpp"
#include "splitcourant/vector_form.hpp"

namespace splitcourant {

struct TupleOptions {
  int x_degree = 2;
  std::uint64_t seed = 0;
  std::size_t max_generator_tuples = 400;
  std::size_t extra_tuples = 24;
  int max_arity = 5;
};

using Tuple = std::vector<Superfunction>;

class TupleSet {
 public:
  TupleSet(Dims dims, Grading grading, TupleOptions options = {});

  Dims dims() const { return dims_; }
  Grading grading() const { return grading_; }
  const TupleOptions& options() const { return options_; }

  // Generators x_i then the odd generators, in canonical order.
  const std::vector<Superfunction>& generators() const { return generators_; }
  const std::vector<Superfunction>& extras() const { return extras_; }

  const std::vector<Tuple>& tuples(int arity) const;
  std::size_t total_size() const;

 private:
  Dims dims_;
  Grading grading_;
  TupleOptions options_;
  std::vector<Superfunction> generators_;
  std::vector<Superfunction> extras_;
  std::vector<std::vector<Tuple>> by_arity_;
};

// Index multisets {i_1 <= ... <= i_m} over `count` symbols; `odd` marks
// symbols that may not repeat.
std::vector<std::vector<int>> multisets(const std::vector<bool>& odd, int m);

// x-monomials of total degree <= max_degree, constant first.
std::vector<Superfunction> x_monomials(Dims dims, int max_degree);

}  // namespace splitcourant
