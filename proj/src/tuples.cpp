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

#include "splitcourant/tuples.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "splitcourant/error.hpp"

namespace splitcourant {

std::vector<std::vector<int>> multisets(const std::vector<bool>& odd, int m) {
  std::vector<std::vector<int>> out;
  const int count = static_cast<int>(odd.size());
  std::vector<int> current;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(current.size()) == m) {
      out.push_back(current);
      return;
    }
    for (int i = start; i < count; ++i) {
      current.push_back(i);
      self(self, odd[i] ? i + 1 : i);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Superfunction> x_monomials(Dims dims, int max_degree) {
  std::vector<Superfunction> out;
  for (int deg = 0; deg <= max_degree; ++deg) {
    std::vector<bool> even(dims.n, false);
    for (const auto& ms : multisets(even, deg)) {
      std::vector<Generator> factors;
      for (int i : ms) factors.push_back(Generator::x(i + 1));
      out.push_back(Superfunction::from_monomial(dims, Rational(1), factors));
    }
  }
  return out;
}

TupleSet::TupleSet(Dims dims, Grading grading, TupleOptions options)
    : dims_(dims), grading_(grading), options_(options) {
  if (options.max_arity < 0 || options.max_arity > 8) {
    throw PreconditionError("tuple arity must lie in [0,8]");
  }
  auto odd_gen = [&](int a) {
    return grading == Grading::L ? Generator::theta(a) : Generator::xi(a);
  };
  std::vector<bool> odd;
  for (int i = 1; i <= dims.n; ++i) {
    generators_.push_back(Superfunction::generator(dims, Generator::x(i)));
    odd.push_back(false);
  }
  for (int a = 1; a <= dims.d; ++a) {
    generators_.push_back(Superfunction::generator(dims, odd_gen(a)));
    odd.push_back(true);
  }

  const auto xs = x_monomials(dims, options.x_degree);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    for (int a = 1; a <= dims.d; ++a) {
      extras_.push_back(xs[i] * Superfunction::generator(dims, odd_gen(a)));
    }
  }
  for (int a = 1; a <= dims.d; ++a) {
    for (int b = a + 1; b <= dims.d; ++b) {
      extras_.push_back(Superfunction::from_monomial(dims, Rational(1), {odd_gen(a), odd_gen(b)}));
    }
  }
  extras_.insert(extras_.end(), xs.begin(), xs.end());

  std::mt19937_64 rng(options.seed);
  std::vector<Superfunction> pool = generators_;
  pool.insert(pool.end(), extras_.begin(), extras_.end());

  by_arity_.resize(options.max_arity + 1);
  for (int m = 0; m <= options.max_arity; ++m) {
    auto& list = by_arity_[m];
    auto all = multisets(odd, m);
    if (all.size() <= options.max_generator_tuples) {
      for (const auto& ms : all) {
        Tuple t;
        for (int i : ms) t.push_back(generators_[i]);
        list.push_back(std::move(t));
      }
    } else {
      std::set<std::size_t> chosen;
      while (chosen.size() < options.max_generator_tuples) chosen.insert(rng() % all.size());
      for (std::size_t idx : chosen) {
        Tuple t;
        for (int i : all[idx]) t.push_back(generators_[i]);
        list.push_back(std::move(t));
      }
    }
    if (m == 0 || extras_.empty()) continue;
    for (std::size_t e = 0; e < options.extra_tuples; ++e) {
      Tuple t;
      const std::size_t forced = rng() % m;
      for (int i = 0; i < m; ++i) {
        if (static_cast<std::size_t>(i) == forced) {
          t.push_back(extras_[rng() % extras_.size()]);
        } else {
          t.push_back(pool[rng() % pool.size()]);
        }
      }
      list.push_back(std::move(t));
    }
  }
}

const std::vector<Tuple>& TupleSet::tuples(int arity) const {
  if (arity < 0 || arity >= static_cast<int>(by_arity_.size())) {
    throw PreconditionError("tuple set built only up to arity " +
                            std::to_string(by_arity_.size() - 1));
  }
  return by_arity_[arity];
}

std::size_t TupleSet::total_size() const {
  std::size_t s = 0;
  for (const auto& l : by_arity_) s += l.size();
  return s;
}

}  // namespace splitcourant
