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

// Command-line front end over the C API.
//
//   splitcourant run FILE [options]
//   splitcourant COMMAND FILE [command flags] [options]

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "splitcourant/splitcourant.h"

namespace {

struct GlobalOptions {
  bool json = false;
  uint64_t seed = 0;
  int tuples_degree = 2;
  int max_order = 8;
  uint64_t max_tuples = 400;
  bool timing = false;
};

void add_options(CLI::App& app, std::string& file, GlobalOptions& g) {
  app.add_option("file", file, "problem specification file")->required();
  app.add_flag("--json", g.json, "print the report as JSON");
  app.add_option("--seed", g.seed, "seed for sampled test tuples");
  app.add_option("--tuples-degree", g.tuples_degree, "maximal x-degree of test tuples")
      ->check(CLI::Range(0, 8));
  app.add_option("--max-order", g.max_order, "maximal order of exponential series")
      ->check(CLI::Range(1, 64));
  app.add_option("--max-tuples", g.max_tuples, "cap on generator tuples per arity")
      ->check(CLI::PositiveNumber);
  app.add_flag("--timing", g.timing, "record per-check wall time");
}

std::string quote(const std::string& arg) {
  if (!arg.empty() && arg.find_first_of(" \t\"") == std::string::npos) return arg;
  return "\"" + arg + "\"";
}

struct Deleter {
  void operator()(sc_problem* p) const { sc_problem_destroy(p); }
  void operator()(sc_report* r) const { sc_report_destroy(r); }
};

int execute(const std::string& file, const GlobalOptions& g, const std::string* command) {
  sc_problem* raw_problem = nullptr;
  if (sc_problem_load(file.c_str(), &raw_problem) != SC_OK) {
    std::cerr << "splitcourant: " << file << ": " << sc_last_error() << '\n';
    return 2;
  }
  std::unique_ptr<sc_problem, Deleter> problem(raw_problem);

  sc_run_options options;
  sc_run_options_default(&options);
  options.seed = g.seed;
  options.tuples_degree = g.tuples_degree;
  options.max_order = g.max_order;
  options.max_tuples = g.max_tuples;
  options.timing = g.timing ? 1 : 0;

  sc_report* raw_report = nullptr;
  if (sc_problem_run(problem.get(), &options, command ? command->c_str() : nullptr,
                     &raw_report) != SC_OK) {
    std::cerr << "splitcourant: " << sc_last_error() << '\n';
    return 2;
  }
  std::unique_ptr<sc_report, Deleter> report(raw_report);

  char* text = nullptr;
  const sc_status st = g.json ? sc_report_json(report.get(), &text)
                              : sc_report_text(report.get(), &text);
  if (st != SC_OK) {
    std::cerr << "splitcourant: " << sc_last_error() << '\n';
    return 2;
  }
  std::fputs(text, stdout);
  std::fflush(stdout);
  sc_string_free(text);
  return sc_report_exit_code(report.get());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for split Courant algebroids and their L-infinity algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sc_version()));

  std::string file;
  GlobalOptions globals;

  CLI::App* run = app.add_subcommand("run", "run the checks listed in FILE");
  add_options(*run, file, globals);

  std::vector<std::string> names;
  for (int i = 0; const char* name = sc_command_name(i); ++i) names.emplace_back(name);
  std::vector<CLI::App*> commands;
  for (const auto& name : names) {
    CLI::App* sub = app.add_subcommand(name, "run one " + name + " check against FILE");
    add_options(*sub, file, globals);
    sub->allow_extras();
    sub->positionals_at_end(false);
    commands.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (run->parsed()) return execute(file, globals, nullptr);
  for (std::size_t i = 0; i < commands.size(); ++i) {
    if (!commands[i]->parsed()) continue;
    std::string command = names[i];
    for (const auto& extra : commands[i]->remaining()) command += " " + quote(extra);
    return execute(file, globals, &command);
  }
  return 2;
}
