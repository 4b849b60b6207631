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

#include "splitcourant/report.hpp"

#include <array>
#include <sstream>

#include "splitcourant/error.hpp"

namespace splitcourant {

namespace {

constexpr std::array<std::pair<Outcome, std::string_view>, 5> kOutcomes = {{
    {Outcome::Pass, "pass"},
    {Outcome::Fail, "fail"},
    {Outcome::Value, "value"},
    {Outcome::PreconditionFailed, "precondition-failed"},
    {Outcome::ParseError, "parse-error"},
}};

}  // namespace

std::string_view outcome_name(Outcome o) {
  for (const auto& [id, name] : kOutcomes) {
    if (id == o) return name;
  }
  return "unknown";
}

std::optional<Outcome> parse_outcome(std::string_view name) {
  for (const auto& [id, n] : kOutcomes) {
    if (n == name) return id;
  }
  return std::nullopt;
}

int exit_code(const Report& report) {
  bool parse = false;
  bool precondition = false;
  bool failed = false;
  for (const auto& c : report.checks) {
    parse = parse || c.outcome == Outcome::ParseError;
    precondition = precondition || c.outcome == Outcome::PreconditionFailed;
    failed = failed || c.outcome == Outcome::Fail;
  }
  if (parse) return 2;
  if (precondition) return 3;
  if (failed) return 1;
  return 0;
}

nlohmann::ordered_json to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["schema"] = report.schema;
  j["seed"] = report.settings.seed;
  j["tuples_degree"] = report.settings.tuples_degree;
  j["max_order"] = report.settings.max_order;
  j["max_tuples"] = report.settings.max_tuples;
  j["dims"] = {{"n", report.dims.n}, {"d", report.dims.d}};
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json cj;
    cj["id"] = c.id;
    cj["command"] = c.command;
    auto& inputs = cj["inputs"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : c.inputs) inputs[k] = v;
    cj["outcome"] = outcome_name(c.outcome);
    cj["value"] = c.value ? nlohmann::ordered_json(*c.value) : nlohmann::ordered_json(nullptr);
    cj["defect"] = c.defect ? nlohmann::ordered_json(*c.defect) : nlohmann::ordered_json(nullptr);
    cj["details"] = c.details;
    if (c.timing_ms) cj["timing_ms"] = *c.timing_ms;
    cj["message"] = c.message;
    checks.push_back(std::move(cj));
  }
  return j;
}

Report report_from_json(const nlohmann::ordered_json& j) {
  try {
    Report r;
    r.schema = j.at("schema").get<std::string>();
    if (r.schema != kReportSchema) throw Error("unsupported report schema '" + r.schema + "'");
    r.settings.seed = j.at("seed").get<std::uint64_t>();
    r.settings.tuples_degree = j.at("tuples_degree").get<int>();
    r.settings.max_order = j.at("max_order").get<int>();
    r.settings.max_tuples = j.at("max_tuples").get<std::uint64_t>();
    r.dims = Dims{j.at("dims").at("n").get<int>(), j.at("dims").at("d").get<int>()};
    for (const auto& cj : j.at("checks")) {
      CheckRecord c;
      c.id = cj.at("id").get<std::string>();
      c.command = cj.at("command").get<std::string>();
      for (const auto& [k, v] : cj.at("inputs").items()) c.inputs.emplace_back(k, v.get<std::string>());
      const auto outcome = parse_outcome(cj.at("outcome").get<std::string>());
      if (!outcome) throw Error("unknown outcome in report");
      c.outcome = *outcome;
      if (!cj.at("value").is_null()) c.value = cj.at("value").get<std::string>();
      if (!cj.at("defect").is_null()) c.defect = cj.at("defect").get<std::string>();
      c.details = cj.at("details");
      if (cj.contains("timing_ms")) c.timing_ms = cj.at("timing_ms").get<double>();
      c.message = cj.at("message").get<std::string>();
      r.checks.push_back(std::move(c));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << '[' << outcome_name(c.outcome) << "] " << c.id << ": " << c.command << '\n';
    if (c.value) out << "  value:  " << *c.value << '\n';
    if (c.defect) out << "  defect: " << *c.defect << '\n';
    if (!c.message.empty()) out << "  " << c.message << '\n';
    if (c.timing_ms) out << "  time:   " << *c.timing_ms << " ms\n";
  }
  out << "exit " << exit_code(report) << '\n';
  return out.str();
}

}  // namespace splitcourant
