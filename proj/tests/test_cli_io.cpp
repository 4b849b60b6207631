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

#include <fstream>
#include <sstream>

#include "splitcourant/commands.hpp"
#include "splitcourant/error.hpp"
#include "splitcourant/expression.hpp"
#include "splitcourant/problem.hpp"
#include "splitcourant/report.hpp"
#include "support.hpp"

using namespace splitcourant;

namespace {

Superfunction P(const char* src, Dims dims) { return parse_expression(src, dims); }

std::pair<int, int> error_position(const char* src, Dims dims) {
  try {
    parse_expression(src, dims);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

std::string spec_path(const char* name) { return std::string(SC_SOURCE_DIR) + "/specs/" + name; }

Report run_text(const std::string& text, const RunOptions& options = {}) {
  return run_problem(parse_problem(text), options);
}

const char* kHeader = "[problem]\nn = 2\nd = 2\n[bindings]\n";

}  // namespace

TEST_CASE("expressions") {
  const Dims dims{2, 2};
  CHECK(P("p1*xi1 + p2*xi2", dims) == sctest::mu_tm(dims));
  CHECK(P("th1*th1", dims).is_zero());
  CHECK(render(P("th1*th1", dims)) == "0");
  const auto f = P("1/2 x1^2 th1*xi2", dims);
  REQUIRE(f.size() == 1);
  CHECK(f.terms().begin()->second == Rational(-1, 2));
  CHECK(f.homogeneous_bidegree() == Bidegree{1, 1});
  CHECK(render(f) == "-1/2*x1^2*xi2*th1");
  CHECK(P("-(x1 - th1)", dims) == P("th1 - x1", dims));
  CHECK(P("2/4 x1 x1", dims) == P("1/2*x1^2", dims));
  CHECK(P("  x1 *\tx2 ", dims) == P("x1*x2", dims));
  CHECK(P("p1^2", dims) == P("p1*p1", dims));
}

TEST_CASE("expression errors carry positions") {
  const Dims dims{2, 2};
  CHECK(error_position("y1", dims) == std::pair{1, 1});
  CHECK(error_position("x1 + x3", dims) == std::pair{1, 6});
  CHECK(error_position("xi1^2", dims) == std::pair{1, 4});
  CHECK(error_position("1/0*x1", dims) == std::pair{1, 1});
  CHECK(error_position("x1 +", dims) == std::pair{1, 5});
  CHECK(error_position("(x1", dims) == std::pair{1, 4});
  CHECK(error_position("th0", dims) == std::pair{1, 1});
  CHECK(error_position("", dims) == std::pair{1, 1});
  CHECK_THROWS_WITH_AS(parse_expression("y1", dims), "1:1: unknown generator", ParseError);

  try {
    parse_expression("x1 + th3", dims, nullptr, {4, 9});
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 14);
  }
}

TEST_CASE("render and parse are inverse on normal forms") {
  sctest::Random rnd(71);
  const Dims dims{3, 3};
  for (int t = 0; t < 200; ++t) {
    const auto f = rnd.homogeneous(dims, {rnd.uniform(0, 3), rnd.uniform(0, 3)}, rnd.uniform(0, 4));
    const std::string text = render(f);
    CHECK(P(text.c_str(), dims) == f);
    CHECK(render(P(text.c_str(), dims)) == text);
  }
}

TEST_CASE("bindings") {
  const Dims dims{1, 1};
  Bindings b;
  b.emplace("mu", P("p1*xi1", dims));
  CHECK(parse_expression("2*$mu + x1*th1", dims, &b) == P("2*p1*xi1 + x1*th1", dims));
  CHECK_THROWS_AS(parse_expression("$nu", dims, &b), ParseError);
}

TEST_CASE("problem files") {
  const auto spec = parse_problem(
      "# comment\r\n[problem]\r\nn = 1\r\nd = 1\r\n\r\n[bindings]\r\n"
      "mu = \"p1*xi1\"  # the tangent bundle\r\ntheta = \"$mu\"\r\n"
      "[checks]\r\ncheck-courant\r\ndorfman --u \"x1*th1 # not a comment\" --v th1\r\n");
  CHECK(spec.dims == Dims{1, 1});
  CHECK(spec.bindings.at("theta") == P("p1*xi1", spec.dims));
  REQUIRE(spec.checks.size() == 2);
  CHECK(spec.checks[1].argv ==
        std::vector<std::string>{"dorfman", "--u", "x1*th1 # not a comment", "--v", "th1"});
  CHECK(spec.checks[1].line == 11);
  CHECK(spec.binding_sources.front().first == "mu");

  CHECK_THROWS_AS(parse_problem("[problem]\nn=1\nd=1\n[bindings]\na=\"$b\"\nb=\"x1\"\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("[problem]\nn=1\nd=1\n[bindings]\na=\"x1\"\na=\"x1\"\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("[problem]\nn=9\nd=1\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("[problem]\nn=1\nd=0\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("[bindings]\na=\"x1\"\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("[problem]\nn=1\nd=1\n[other]\n"), ParseError);
  CHECK_THROWS_WITH_AS(parse_problem("[problem]\nn=1\nd=1\n[bindings]\na=\"x2\"\n"),
                       "5:4: generator index 2 out of range (bound 1)", ParseError);
  CHECK_THROWS_AS(split_command("verify-face --face \"cube", 3), ParseError);
}

TEST_CASE("report round trip and exit codes") {
  Report r;
  r.settings.seed = 5;
  r.dims = {2, 3};
  CheckRecord a;
  a.id = "check-1";
  a.command = "check-courant";
  a.inputs = {{"theta", "p1*xi1"}};
  a.outcome = Outcome::Fail;
  a.defect = "2*xi1*xi2";
  a.details["components"] = {{"{mu,phi}", "xi1*xi2"}};
  a.timing_ms = 1.5;
  a.message = "nonzero components: {mu,phi}";
  r.checks.push_back(a);
  CheckRecord b;
  b.id = "check-2";
  b.command = "anchor";
  b.outcome = Outcome::Value;
  b.value = "x1";
  r.checks.push_back(b);

  const auto j = to_json(r);
  const Report back = report_from_json(nlohmann::ordered_json::parse(j.dump()));
  CHECK(to_json(back) == j);
  CHECK(back.checks[0].timing_ms == 1.5);
  CHECK(back.checks[1].value == "x1");
  CHECK(exit_code(r) == 1);

  r.checks[1].outcome = Outcome::PreconditionFailed;
  CHECK(exit_code(r) == 3);
  r.checks[0].outcome = Outcome::ParseError;
  CHECK(exit_code(r) == 2);
  r.checks.clear();
  CHECK(exit_code(r) == 0);
  CHECK_THROWS_AS(report_from_json(nlohmann::ordered_json::parse("{\"schema\": \"other\"}")), Error);
}

TEST_CASE("example problem files") {
  const std::pair<const char*, int> cases[] = {
      {"tm_line.spec", 0}, {"nonclosed_three_form.spec", 1}, {"cube.spec", 0}};
  for (const auto& [name, code] : cases) {
    INFO(name);
    const auto spec = load_problem(spec_path(name));
    RunOptions options;
    options.seed = 3;
    const auto first = to_json(run_problem(spec, options)).dump(2);
    const auto second = to_json(run_problem(load_problem(spec_path(name)), options)).dump(2);
    CHECK(first == second);
    CHECK(exit_code(run_problem(spec, options)) == code);
  }
  const auto r = run_problem(load_problem(spec_path("nonclosed_three_form.spec")));
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].message == "nonzero components: {mu,phi}");
  CHECK(r.checks[0].details["components"]["{mu,phi}"] == "-xi1*xi2*xi3*xi4");
}

TEST_CASE("commands") {
  const std::string base = std::string(kHeader) +
                           "theta = \"p1*xi1 + p2*xi2\"\n"
                           "N = \"th1*xi2 + th2*xi1\"\n"
                           "pi = \"x1*th1*th2\"\n"
                           "omega = \"xi1*xi2\"\n"
                           "mu = \"p1*xi1 + p2*xi2\"\n"
                           "[checks]\n";
  const auto one = [&](const std::string& line) {
    const auto r = run_text(base + line + "\n");
    REQUIRE(r.checks.size() == 1);
    return r.checks[0];
  };

  CHECK(one("check-courant").outcome == Outcome::Pass);
  CHECK(one("dorfman --u th1 --v x1*th1").value == "th1");
  CHECK(one("anchor --u th1 --f x1^2").value == "2*x1");
  CHECK(one("to-linf").outcome == Outcome::Value);
  CHECK(one("check-linf --max-n 3").outcome == Outcome::Pass);
  CHECK(one("deform --j N").outcome == Outcome::Value);
  const auto tor = one("torsion --j N");
  CHECK(tor.outcome == Outcome::Pass);
  CHECK(tor.inputs.back() == std::pair<std::string, std::string>{"lambda", "1"});
  CHECK(one("torsion --j N --lambda 2").outcome == Outcome::PreconditionFailed);
  CHECK(one("twist --pi pi").outcome == Outcome::Pass);
  CHECK(one("twist --omega omega").outcome == Outcome::Pass);
  CHECK(one("twist-linf --pi pi").outcome == Outcome::Pass);
  CHECK(one("check-mc --pi pi").outcome == Outcome::Pass);
  CHECK(one("check-nijenhuis").outcome == Outcome::Pass);
  CHECK(one("check-structure --kind poisson").outcome == Outcome::Pass);
  CHECK(one("check-structure --kind maurer-cartan").outcome == Outcome::Pass);
  CHECK(one("verify-face --face twist-square").outcome == Outcome::Pass);
  CHECK(one("verify-cube").outcome == Outcome::Pass);

  CHECK(one("verify-face --face nowhere").outcome == Outcome::ParseError);
  CHECK(one("check-courant --bogus 1").outcome == Outcome::ParseError);
  CHECK(one("frobnicate").outcome == Outcome::ParseError);
  CHECK(one("dorfman --u q1 --v th1").outcome == Outcome::ParseError);
  CHECK(one("check-mc --pi xi1*xi2").outcome == Outcome::PreconditionFailed);
  CHECK(one("anchor --u th1*th2 --f x1").outcome == Outcome::PreconditionFailed);
  CHECK(one("check-courant --theta th1").outcome == Outcome::PreconditionFailed);

  const auto mixed = run_text(base + "check-courant\nfrobnicate\ncheck-mc --pi xi1*xi2\n");
  CHECK(exit_code(mixed) == 2);
  CHECK(mixed.checks[0].id == "check-1");
  CHECK(mixed.checks[2].id == "check-3");
}

TEST_CASE("timing is recorded only on request") {
  const std::string text = std::string(kHeader) + "theta = \"p1*xi1\"\n[checks]\ncheck-courant\n";
  CHECK(!run_text(text).checks[0].timing_ms.has_value());
  RunOptions options;
  options.timing = true;
  CHECK(run_text(text, options).checks[0].timing_ms.has_value());
}
