// Copyright 2026 The tokensat Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tokensat/commands.hpp"

#include <csignal>
#include <fstream>
#include <iomanip>
#include <pthread.h>
#include <thread>

#include "tokensat/dimacs.hpp"
#include "tokensat/game_json.hpp"
#include "tokensat/http_server.hpp"
#include "tokensat/reduction.hpp"
#include "tokensat/service.hpp"
#include "tokensat/solvers.hpp"

namespace tokensat::cli {
namespace {

void print_model(std::ostream& out, const Interpretation& model) {
  out << 'v';
  for (uint32_t v = 1; v <= model.num_variables(); ++v)
    out << ' ' << (model.value(Variable{v}) ? "" : "-") << v;
  out << " 0\n";
}

double millis(std::chrono::nanoseconds ns) { return static_cast<double>(ns.count()) / 1e6; }

}  // namespace

int cmd_solve(const SolveOptions& options, std::ostream& out, std::ostream& err) {
  try {
    options.search.validate();
    CnfFormula formula = read_dimacs_file(options.path);
    SolveResult result = SolveResult::unknown();
    switch (options.engine) {
      case Engine::Brute: result = brute_force_sat(formula); break;
      case Engine::Dpll: result = dpll(formula); break;
      case Engine::Local: result = local_search(formula, options.search); break;
    }
    if (options.engine == Engine::Local)
      out << "c flips " << result.stats().flips << " restarts " << result.stats().restarts << '\n';
    out << "s " << to_string(result.outcome()) << '\n';
    switch (result.outcome()) {
      case Outcome::Satisfiable:
        print_model(out, *result.model());
        return kExitSatisfiable;
      case Outcome::Unsatisfiable: return kExitUnsatisfiable;
      case Outcome::Unknown: return kExitSuccess;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

int cmd_convert(const ConvertOptions& options, std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    if (options.direction == Direction::CnfToGame)
      text = serialize_game(encode(read_dimacs_file(options.input))) + "\n";
    else
      text = serialize_dimacs(decode(read_game_file(options.input)));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  if (options.output.empty()) {
    out << text;
    return kExitSuccess;
  }
  std::ofstream file(options.output, std::ios::binary);
  file << text;
  if (!file) {
    err << "error: cannot write '" << options.output << "'\n";
    return kExitError;
  }
  return kExitSuccess;
}

int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err) {
  try {
    if (options.planted) {
      PlantedInstance p = planted_sat(options.spec);
      out << "c planted:";
      for (uint32_t v = 1; v <= p.hidden.num_variables(); ++v)
        out << ' ' << (p.hidden.value(Variable{v}) ? "" : "-") << v;
      out << " 0\n" << serialize_dimacs(p.formula);
    } else {
      out << serialize_dimacs(random_ksat(options.spec));
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitSuccess;
}

int cmd_check_equivalence(const EquivalenceOptions& options, std::ostream& out,
                          std::ostream& err) {
  EquivalenceReport report;
  try {
    report = check_equivalence(options);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  out << "exhaustive instances: " << report.exhaustive_instances << " (colors<="
      << options.max_colors << ", boxes<=" << options.max_boxes
      << ", tokens/box<=" << options.max_tokens_per_box << ")\n";
  out << "random instances: " << report.random_instances << " (colors<="
      << options.random_max_colors << ", seed " << options.seed << ")\n";
  out << "feasible: " << report.feasible << "  infeasible: " << report.infeasible << '\n';
  out << std::fixed << std::setprecision(1);
  out << "original oracle: " << millis(report.original_oracle_time) << " ms\n";
  out << "variant oracle: " << millis(report.variant_oracle_time) << " ms\n";
  out << "transforms: " << millis(report.transform_time) << " ms\n";
  out << "discrepancies: " << report.discrepancies << '\n';
  if (report.discrepancies == 0) return kExitSuccess;
  out << "counterexample (" << report.failure << "): " << serialize_game(*report.counterexample)
      << '\n';
  return kExitError;
}

int cmd_serve(const ServeOptions& options, std::ostream& out, std::ostream& err) {
  // Route termination signals to a waiter thread instead of a handler.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  GameService service(ServiceOptions{options.instance_dir});
  HttpServer server(service, options.static_dir);
  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    server.stop();
  });

  out << "serving on http://" << options.host << ':' << options.port << std::endl;
  bool ok = server.listen(options.host, options.port);
  if (!ok) {
    err << "error: cannot listen on " << options.host << ':' << options.port << '\n';
    pthread_kill(waiter.native_handle(), SIGTERM);
  }
  waiter.join();
  if (options.persist) out << "persisted " << service.persist_sessions() << " sessions\n";
  return ok ? kExitSuccess : kExitError;
}

}  // namespace tokensat::cli
