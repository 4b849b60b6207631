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

#include "splitcourant/splitcourant.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "splitcourant/commands.hpp"
#include "splitcourant/error.hpp"
#include "splitcourant/expression.hpp"
#include "splitcourant/problem.hpp"

struct sc_function {
  splitcourant::Superfunction value;
};

struct sc_problem {
  splitcourant::ProblemSpec spec;
};

struct sc_report {
  splitcourant::Report report;
};

namespace {

thread_local std::string last_error;

sc_status fail(sc_status status, const char* message) {
  last_error = message;
  return status;
}

template <typename F>
sc_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return SC_OK;
  } catch (const splitcourant::ParseError& e) {
    return fail(SC_ERR_PARSE, e.what());
  } catch (const splitcourant::DimensionMismatch& e) {
    return fail(SC_ERR_DIMENSION, e.what());
  } catch (const splitcourant::DegreeError& e) {
    return fail(SC_ERR_DEGREE, e.what());
  } catch (const splitcourant::PreconditionError& e) {
    return fail(SC_ERR_PRECONDITION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SC_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Op>
sc_status binary(const sc_function* a, const sc_function* b, sc_function** out, Op op) {
  if (a == nullptr || b == nullptr || out == nullptr) {
    return fail(SC_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    splitcourant::require_same_dims(a->value.dims(), b->value.dims());
    *out = new sc_function{op(a->value, b->value)};
  });
}

}  // namespace

extern "C" {

const char* sc_version(void) { return "1.0.0"; }

const char* sc_last_error(void) { return last_error.c_str(); }

void sc_string_free(char* s) { std::free(s); }

sc_status sc_function_parse(const char* src, int n, int d, sc_function** out) {
  if (src == nullptr || out == nullptr) return fail(SC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new sc_function{splitcourant::parse_expression(src, splitcourant::Dims{n, d})};
  });
}

sc_status sc_function_render(const sc_function* f, char** out) {
  if (f == nullptr || out == nullptr) return fail(SC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(splitcourant::render(f->value)); });
}

void sc_function_destroy(sc_function* f) { delete f; }

sc_status sc_function_add(const sc_function* a, const sc_function* b, sc_function** out) {
  return binary(a, b, out, [](const auto& x, const auto& y) { return x + y; });
}

sc_status sc_function_multiply(const sc_function* a, const sc_function* b, sc_function** out) {
  return binary(a, b, out, [](const auto& x, const auto& y) { return x * y; });
}

sc_status sc_function_bracket(const sc_function* a, const sc_function* b, sc_function** out) {
  return binary(a, b, out,
                [](const auto& x, const auto& y) { return splitcourant::bracket(x, y); });
}

int sc_function_is_zero(const sc_function* f) { return f != nullptr && f->value.is_zero(); }

int sc_function_equal(const sc_function* a, const sc_function* b) {
  return a != nullptr && b != nullptr && a->value == b->value;
}

sc_status sc_check_courant(const sc_function* theta, int* is_courant, sc_function** defect) {
  if (theta == nullptr || is_courant == nullptr) {
    return fail(SC_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const auto report = splitcourant::integrability(splitcourant::decompose(theta->value));
    *is_courant = report.is_courant ? 1 : 0;
    if (defect != nullptr) *defect = new sc_function{report.full};
  });
}

sc_status sc_problem_load(const char* path, sc_problem** out) {
  if (path == nullptr || out == nullptr) return fail(SC_ERR_INVALID_ARGUMENT, "null argument");
  try {
    last_error.clear();
    *out = new sc_problem{splitcourant::load_problem(path)};
    return SC_OK;
  } catch (const splitcourant::ParseError& e) {
    return fail(SC_ERR_PARSE, e.what());
  } catch (const splitcourant::Error& e) {
    return fail(SC_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(SC_ERR_INTERNAL, e.what());
  }
}

sc_status sc_problem_parse(const char* text, sc_problem** out) {
  if (text == nullptr || out == nullptr) return fail(SC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new sc_problem{splitcourant::parse_problem(text)}; });
}

void sc_problem_destroy(sc_problem* p) { delete p; }

int sc_problem_check_count(const sc_problem* p) {
  return p == nullptr ? 0 : static_cast<int>(p->spec.checks.size());
}

const char* sc_command_name(int index) {
  const auto& names = splitcourant::command_names();
  if (index < 0 || static_cast<std::size_t>(index) >= names.size()) return nullptr;
  return names[static_cast<std::size_t>(index)].c_str();
}

void sc_run_options_default(sc_run_options* options) {
  if (options == nullptr) return;
  const splitcourant::RunOptions defaults;
  options->seed = defaults.seed;
  options->tuples_degree = defaults.tuples_degree;
  options->max_order = defaults.max_order;
  options->max_tuples = defaults.max_tuples;
  options->timing = defaults.timing ? 1 : 0;
}

sc_status sc_problem_run(const sc_problem* p, const sc_run_options* options, const char* command,
                         sc_report** out) {
  if (p == nullptr || out == nullptr) return fail(SC_ERR_INVALID_ARGUMENT, "null argument");
  sc_run_options opts;
  sc_run_options_default(&opts);
  if (options != nullptr) opts = *options;
  if (opts.tuples_degree < 0 || opts.max_order < 1 || opts.max_tuples == 0) {
    return fail(SC_ERR_INVALID_ARGUMENT, "invalid run options");
  }
  return guarded([&] {
    splitcourant::RunOptions run;
    run.seed = opts.seed;
    run.tuples_degree = opts.tuples_degree;
    run.max_order = opts.max_order;
    run.max_tuples = opts.max_tuples;
    run.timing = opts.timing != 0;
    std::optional<std::vector<splitcourant::CheckRequest>> requests;
    if (command != nullptr) {
      requests.emplace();
      // An unparsable command line becomes a parse-error record.
      try {
        requests->push_back(splitcourant::make_request(command));
      } catch (const splitcourant::ParseError& e) {
        auto report = splitcourant::run_problem(p->spec, run, std::vector<splitcourant::CheckRequest>{});
        splitcourant::CheckRecord record;
        record.id = "check-1";
        record.command = command;
        record.outcome = splitcourant::Outcome::ParseError;
        record.message = e.what();
        report.checks.push_back(std::move(record));
        *out = new sc_report{std::move(report)};
        return;
      }
    }
    *out = new sc_report{splitcourant::run_problem(p->spec, run, requests)};
  });
}

int sc_report_exit_code(const sc_report* r) {
  return r == nullptr ? 2 : splitcourant::exit_code(r->report);
}

sc_status sc_report_json(const sc_report* r, char** out) {
  if (r == nullptr || out == nullptr) return fail(SC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(splitcourant::to_json(r->report).dump(2) + "\n"); });
}

sc_status sc_report_text(const sc_report* r, char** out) {
  if (r == nullptr || out == nullptr) return fail(SC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(splitcourant::to_text(r->report)); });
}

void sc_report_destroy(sc_report* r) { delete r; }

}  // extern "C"
