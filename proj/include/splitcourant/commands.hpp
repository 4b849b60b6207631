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

// Executes the check requests of a problem specification.

#include <cstdint>
#include <optional>

#include "splitcourant/problem.hpp"
#include "splitcourant/report.hpp"
#include "splitcourant/verify.hpp"

namespace splitcourant {

struct RunOptions {
  std::uint64_t seed = 0;
  int tuples_degree = kDefaultXDegree;
  int max_order = kDefaultMaxOrder;
  std::uint64_t max_tuples = 400;
  bool timing = false;
};

// Check command names in a fixed order.
const std::vector<std::string>& command_names();

CheckOptions check_options(const RunOptions& options);

// Never throws for problems in a single request; those become records.
CheckRecord run_check(const ProblemSpec& spec, const CheckRequest& request,
                      const RunOptions& options = {});

// Runs `requests`, or the checks of the spec when absent, in order.
Report run_problem(const ProblemSpec& spec, const RunOptions& options = {},
                   const std::optional<std::vector<CheckRequest>>& requests = std::nullopt);

}  // namespace splitcourant
