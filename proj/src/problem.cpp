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

#include "splitcourant/problem.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "splitcourant/error.hpp"

namespace splitcourant {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Cuts a trailing comment that is not inside quotes.
std::string_view strip_comment(std::string_view s) {
  bool quoted = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') quoted = !quoted;
    if (s[i] == '#' && !quoted) return s.substr(0, i);
  }
  return s;
}

bool valid_name(std::string_view name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) {
    return false;
  }
  for (char c : name) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

enum class Section { None, Problem, Bindings, Checks };

}  // namespace

std::vector<std::string> split_command(std::string_view line, int line_number, int column) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i >= line.size()) break;
    std::string word;
    bool quoted_any = false;
    while (i < line.size() && !is_space(line[i])) {
      if (line[i] == '"') {
        const std::size_t open = i++;
        while (i < line.size() && line[i] != '"') word += line[i++];
        if (i >= line.size()) {
          throw ParseError("unterminated quote", line_number, column + static_cast<int>(open));
        }
        ++i;
        quoted_any = true;
      } else {
        word += line[i++];
      }
    }
    if (!word.empty() || quoted_any) words.push_back(std::move(word));
  }
  return words;
}

CheckRequest make_request(std::string_view line, int line_number) {
  CheckRequest r;
  r.text = std::string(trim(line));
  r.argv = split_command(line, line_number == 0 ? 1 : line_number);
  r.line = line_number;
  if (r.argv.empty()) throw ParseError("empty command", line_number == 0 ? 1 : line_number, 1);
  return r;
}

ProblemSpec parse_problem(std::string_view text) {
  ProblemSpec spec;
  std::optional<int> n;
  std::optional<int> d;
  Section section = Section::None;
  int line_no = 0;
  std::size_t pos = 0;
  auto dims_ready = [&](int line, int col) {
    if (!n || !d) throw ParseError("[problem] must set n and d before bindings", line, col);
    if (spec.bindings.empty() && spec.binding_sources.empty()) spec.dims = Dims{*n, *d};
  };
  while (pos <= text.size()) {
    const std::size_t end = text.find('\n', pos);
    std::string_view raw = text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    const std::string_view content = strip_comment(raw);
    const std::string_view line = trim(content);
    if (line.empty()) continue;
    const int col0 = static_cast<int>(line.data() - raw.data()) + 1;

    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("malformed section header", line_no, col0);
      const std::string_view name = trim(line.substr(1, line.size() - 2));
      if (name == "problem") {
        section = Section::Problem;
      } else if (name == "bindings") {
        section = Section::Bindings;
      } else if (name == "checks") {
        section = Section::Checks;
      } else {
        throw ParseError("unknown section [" + std::string(name) + "]", line_no, col0);
      }
      continue;
    }

    switch (section) {
      case Section::None:
        throw ParseError("content outside of a section", line_no, col0);
      case Section::Problem: {
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected key = value", line_no, col0);
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        const int vcol = static_cast<int>(value.data() - raw.data()) + 1;
        int v = 0;
        std::size_t used = 0;
        try {
          v = std::stoi(std::string(value), &used);
        } catch (const std::exception&) {
          throw ParseError("expected an integer", line_no, vcol);
        }
        if (used != value.size()) throw ParseError("expected an integer", line_no, vcol);
        if (!spec.binding_sources.empty()) {
          throw ParseError("dimensions cannot change after bindings", line_no, col0);
        }
        if (key == "n") {
          if (v < 0 || v > kMaxBaseDim) {
            throw ParseError("n must lie in [0," + std::to_string(kMaxBaseDim) + "]", line_no, vcol);
          }
          n = v;
        } else if (key == "d") {
          if (v < 1 || v > kMaxFiberDim) {
            throw ParseError("d must lie in [1," + std::to_string(kMaxFiberDim) + "]", line_no, vcol);
          }
          d = v;
        } else {
          throw ParseError("unknown key '" + std::string(key) + "'", line_no, col0);
        }
        break;
      }
      case Section::Bindings: {
        dims_ready(line_no, col0);
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected name = \"expression\"", line_no, col0);
        const std::string_view name = trim(line.substr(0, eq));
        if (!valid_name(name)) throw ParseError("invalid binding name", line_no, col0);
        if (spec.bindings.count(name)) {
          throw ParseError("duplicate binding '" + std::string(name) + "'", line_no, col0);
        }
        const std::string_view value = trim(line.substr(eq + 1));
        const int vcol = static_cast<int>(value.data() - raw.data()) + 1;
        if (value.size() < 2 || value.front() != '"' || value.back() != '"') {
          throw ParseError("binding value must be a quoted expression", line_no, vcol);
        }
        const std::string_view expr = value.substr(1, value.size() - 2);
        Superfunction f = parse_expression(expr, spec.dims, &spec.bindings, {line_no, vcol + 1});
        spec.binding_sources.emplace_back(std::string(name), std::string(expr));
        spec.bindings.emplace(std::string(name), std::move(f));
        break;
      }
      case Section::Checks: {
        CheckRequest r;
        r.text = std::string(line);
        r.argv = split_command(line, line_no, col0);
        r.line = line_no;
        spec.checks.push_back(std::move(r));
        break;
      }
    }
  }
  if (!n || !d) throw ParseError("missing [problem] dimensions n and d", line_no == 0 ? 1 : line_no, 1);
  spec.dims = Dims{*n, *d};
  return spec;
}

ProblemSpec load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

}  // namespace splitcourant
