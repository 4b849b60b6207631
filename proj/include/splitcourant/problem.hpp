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

// Problem files: a sectioned text format.
//
//   # comment
//   [problem]
//   n = 2
//   d = 2
//   [bindings]
//   theta = "p1*xi1 + p2*xi2"
//   pi    = "x1*th1*th2"
//   [checks]
//   check-courant
//   verify-face --face cube --pi pi
//
// Binding values are quoted expressions and may refer to earlier bindings
// as $name. Each check line is a command followed by flags; flag values may
// be quoted. LF and CRLF line endings are accepted.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "splitcourant/expression.hpp"

namespace splitcourant {

struct CheckRequest {
  std::string text;               // the line as written, trimmed
  std::vector<std::string> argv;  // command then flags
  int line = 0;                   // 0 for requests not read from a file
};

struct ProblemSpec {
  Dims dims;
  std::vector<std::pair<std::string, std::string>> binding_sources;  // in file order
  Bindings bindings;
  std::vector<CheckRequest> checks;
};

// Throws ParseError with line and column.
ProblemSpec parse_problem(std::string_view text);
ProblemSpec load_problem(const std::string& path);

// Splits a command line into words, honouring double quotes.
std::vector<std::string> split_command(std::string_view line, int line_number = 1,
                                       int column = 1);
CheckRequest make_request(std::string_view line, int line_number = 0);

}  // namespace splitcourant
