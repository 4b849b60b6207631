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

#include <doctest.h>

#include "splitcourant/error.hpp"
#include "splitcourant/expression.hpp"
#include "support.hpp"

using namespace splitcourant;
using sctest::gen;

namespace {

Superfunction P(const char* src, Dims dims) { return parse_expression(src, dims); }

int parity(const Superfunction& f) { return *f.total_degree() % 2; }

}  // namespace

TEST_CASE("odd generators anticommute and square to zero") {
  const Dims dims{1, 2};
  const auto xi1 = gen(dims, Generator::xi(1));
  const auto th1 = gen(dims, Generator::theta(1));
  CHECK((xi1 * xi1).is_zero());
  CHECK((th1 * th1).is_zero());
  CHECK(th1 * xi1 == -(xi1 * th1));
  CHECK(P("th1*th1", dims).is_zero());
  CHECK(render(th1 * xi1) == "-xi1*th1");
}

TEST_CASE("product of sums expands with signs") {
  const Dims dims{1, 1};
  const auto f = P("x1 + xi1", dims);
  const auto expected = P("x1^2 + 2*x1*xi1", dims);
  CHECK(f * f == expected);
  CHECK(sctest::oracle_product(f, f) == expected);
}

TEST_CASE("monomial multiply reports the reordering sign") {
  const Dims dims{0, 3};
  const auto a = P("xi2*th1", dims);
  const auto b = P("xi1*th3", dims);
  // xi1 moves past th1 and xi2.
  const auto ab = a * b;
  REQUIRE(ab.size() == 1);
  CHECK(ab == sctest::oracle_product(a, b));
  CHECK(ab == P("xi1*xi2*th1*th3", dims));
}

TEST_CASE("bidegree split") {
  const Dims dims{1, 3};
  const auto f = P("th1*th2*th3 + p1*xi1", dims);
  const auto split = f.bidegree_split();
  REQUIRE(split.size() == 2);
  CHECK(split.at({3, 0}) == P("th1*th2*th3", dims));
  CHECK(split.at({1, 2}) == P("p1*xi1", dims));

  const auto g = P("x1*p1*th1*xi2", Dims{1, 2});
  REQUIRE(g.homogeneous_bidegree().has_value());
  CHECK(*g.homogeneous_bidegree() == Bidegree{2, 2});
  CHECK(P("x1^3", dims).homogeneous_bidegree() == Bidegree{0, 0});
  CHECK(!Superfunction(dims).homogeneous_bidegree());
}

TEST_CASE("generator bidegrees") {
  CHECK(bidegree_of(GeneratorKind::X) == Bidegree{0, 0});
  CHECK(bidegree_of(GeneratorKind::P) == Bidegree{1, 1});
  CHECK(bidegree_of(GeneratorKind::Xi) == Bidegree{0, 1});
  CHECK(bidegree_of(GeneratorKind::Theta) == Bidegree{1, 0});
}

TEST_CASE("dimension checks") {
  CHECK_THROWS_AS(Superfunction(Dims{9, 1}), DimensionMismatch);
  CHECK_THROWS_AS(Superfunction(Dims{1, 9}), DimensionMismatch);
  CHECK_THROWS_AS(gen(Dims{1, 1}, Generator::xi(2)), DimensionMismatch);
  const auto a = gen(Dims{1, 1}, Generator::x(1));
  const auto b = gen(Dims{2, 1}, Generator::x(1));
  CHECK_THROWS_AS(a + b, DimensionMismatch);
  CHECK_THROWS_AS(a * b, DimensionMismatch);
}

TEST_CASE("cancellation leaves no zero terms") {
  const Dims dims{2, 2};
  const auto f = P("x1*xi1 + 1/2*th2", dims);
  const auto g = f - f;
  CHECK(g.is_zero());
  CHECK(g.size() == 0);
  CHECK((f * Rational(0)).is_zero());
}

TEST_CASE("random products agree with the word oracle") {
  sctest::Random rnd(11);
  const Dims dims{2, 3};
  for (int t = 0; t < 200; ++t) {
    const Bidegree b1{rnd.uniform(0, 3), rnd.uniform(0, 3)};
    const Bidegree b2{rnd.uniform(0, 2), rnd.uniform(0, 2)};
    const auto f = rnd.homogeneous(dims, b1);
    const auto g = rnd.homogeneous(dims, b2);
    CHECK(f * g == sctest::oracle_product(f, g));
  }
}

TEST_CASE("supercommutativity and associativity") {
  sctest::Random rnd(12);
  const Dims dims{2, 3};
  for (int t = 0; t < 100; ++t) {
    const auto f = rnd.homogeneous(dims, {rnd.uniform(0, 2), rnd.uniform(0, 2)});
    const auto g = rnd.homogeneous(dims, {rnd.uniform(0, 2), rnd.uniform(0, 2)});
    const auto h = rnd.homogeneous(dims, {rnd.uniform(0, 2), rnd.uniform(0, 2)});
    if (f.is_zero() || g.is_zero()) continue;
    const int s = parity(f) * parity(g) ? -1 : 1;
    CHECK(f * g == (g * f) * Rational(s));
    CHECK((f * g) * h == f * (g * h));
  }
}

TEST_CASE("sum and component helpers") {
  const Dims dims{1, 2};
  const std::vector<Superfunction> parts = {P("x1", dims), P("th1*xi2", dims), P("-x1", dims)};
  CHECK(sum(parts) == P("th1*xi2", dims));
  const auto f = P("th1 + th1*th2 + xi1*th2 + p1", dims);
  CHECK(f.component({1, 0}) == P("th1", dims));
  CHECK(f.split_by_theta_count().at(2) == P("th1*th2", dims));
  CHECK(f.split_by_xi_count().at(1) == P("xi1*th2", dims));
  CHECK(f.has_total_degree(2) == false);
  CHECK(P("th1*th2 + p1", dims).has_total_degree(2));
}
