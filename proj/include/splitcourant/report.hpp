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

// Machine-readable run reports (schema "splitcourant.report/1"; see
// docs/report-schema.md).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "splitcourant/superfunction.hpp"

namespace splitcourant {

inline constexpr std::string_view kReportSchema = "splitcourant.report/1";

enum class Outcome { Pass, Fail, Value, PreconditionFailed, ParseError };

std::string_view outcome_name(Outcome o);
std::optional<Outcome> parse_outcome(std::string_view name);

struct CheckRecord {
  std::string id;       // "check-<index>", 1-based
  std::string command;  // the request as written
  std::vector<std::pair<std::string, std::string>> inputs;  // resolved flag values, rendered
  Outcome outcome = Outcome::Pass;
  std::optional<std::string> value;
  std::optional<std::string> defect;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  std::optional<double> timing_ms;
  std::string message;
};

struct ReportSettings {
  std::uint64_t seed = 0;
  int tuples_degree = 2;
  int max_order = 8;
  std::uint64_t max_tuples = 400;
};

struct Report {
  std::string schema = std::string(kReportSchema);
  ReportSettings settings;
  Dims dims;
  std::vector<CheckRecord> checks;
};

// 2 if any check had a parse error, else 3 if any precondition failed, else
// 1 if any check failed, else 0.
int exit_code(const Report& report);

nlohmann::ordered_json to_json(const Report& report);
Report report_from_json(const nlohmann::ordered_json& j);
std::string to_text(const Report& report);

}  // namespace splitcourant
