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

// Concrete syntax for superfunctions.
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := [rational] ('*'? factor)*
//   factor  := generator ['^' posint] | '(' expr ')' | '$' name
//   generator := 'x' INT | 'p' INT | 'xi' INT | 'th' INT
//   rational  := INT ['/' INT]
//
// Whitespace is insignificant. '^' applies only to x and p. `$name` refers to
// an earlier binding.

#include <map>
#include <string>
#include <string_view>

#include "splitcourant/superfunction.hpp"

namespace splitcourant {

using Bindings = std::map<std::string, Superfunction, std::less<>>;

struct SourcePosition {
  int line = 1;
  int column = 1;  // column of the first character of the source
};

// Throws ParseError with the position of the offending character.
Superfunction parse_expression(std::string_view src, Dims dims, const Bindings* bindings = nullptr,
                               SourcePosition where = {});

// Normal-form text, e.g. "1/2*x1^2*xi2*th1 - p1*xi1"; "0" for zero.
std::string render(const Superfunction& f);

}  // namespace splitcourant
