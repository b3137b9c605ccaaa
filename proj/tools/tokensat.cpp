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

// tokensat: solve, convert, generate and play colored-token SAT instances.

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "tokensat/commands.hpp"

using namespace tokensat;

int main(int argc, char** argv) {
  CLI::App app{"Colored tokens game and SAT toolkit"};
  app.require_subcommand(1);

  cli::SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a DIMACS CNF file");
  solve_cmd->add_option("path", solve.path, "DIMACS file")->required();
  solve_cmd->add_option("--engine", solve.engine, "brute | dpll | local")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, cli::Engine>{{"brute", cli::Engine::Brute},
                                             {"dpll", cli::Engine::Dpll},
                                             {"local", cli::Engine::Local}},
          CLI::ignore_case));
  solve_cmd->add_option("--seed", solve.search.seed, "Local search seed")
      ->envname("TOKENSAT_SEED");
  solve_cmd->add_option("--max-flips", solve.search.max_flips, "Flips per restart")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--restarts", solve.search.max_restarts, "Number of restarts")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--noise", solve.search.noise, "Random-walk probability")
      ->check(CLI::Range(0.0, 1.0));
  solve_cmd->add_option("--threads", solve.search.threads, "Threads running restarts");

  cli::ConvertOptions convert;
  auto* convert_cmd = app.add_subcommand("convert", "Convert between DIMACS and game JSON");
  convert_cmd->add_option("input", convert.input, "Input file")->required();
  convert_cmd->add_option("--direction", convert.direction, "cnf2game | game2cnf")
      ->required()
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, cli::Direction>{{"cnf2game", cli::Direction::CnfToGame},
                                                {"game2cnf", cli::Direction::GameToCnf}}));
  convert_cmd->add_option("-o,--output", convert.output, "Output file (default stdout)");

  cli::GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random k-SAT instance");
  gen_cmd->add_option("-n,--vars", gen.spec.num_variables, "Variables")->required();
  gen_cmd->add_option("-m,--clauses", gen.spec.num_clauses, "Clauses")->required();
  gen_cmd->add_option("-k,--width", gen.spec.width, "Literals per clause")->capture_default_str();
  gen_cmd->add_option("--seed", gen.spec.seed, "Generator seed")->envname("TOKENSAT_SEED");
  gen_cmd->add_flag("--planted", gen.planted, "Plant a hidden model (written as a comment)");

  EquivalenceOptions eq;
  auto* eq_cmd =
      app.add_subcommand("check-equivalence", "Cross-check the original and variant rules");
  eq_cmd->add_option("--max-colors", eq.max_colors, "Exhaustive tier: colors")->capture_default_str();
  eq_cmd->add_option("--max-boxes", eq.max_boxes, "Exhaustive tier: boxes")->capture_default_str();
  eq_cmd->add_option("--max-tokens", eq.max_tokens_per_box, "Exhaustive tier: tokens per box")
      ->capture_default_str();
  eq_cmd->add_option("--samples", eq.samples, "Random tier size")->capture_default_str();
  eq_cmd->add_option("--random-colors", eq.random_max_colors, "Random tier: max colors")
      ->check(CLI::Range(1u, kBruteForceMaxVariables))
      ->capture_default_str();
  eq_cmd->add_option("--seed", eq.seed, "Random tier seed")->envname("TOKENSAT_SEED");

  cli::ServeOptions serve;
  auto* serve_cmd = app.add_subcommand("serve", "Run the game service");
  serve_cmd->add_option("--port", serve.port, "TCP port")->capture_default_str();
  serve_cmd->add_option("--host", serve.host, "Bind address")->capture_default_str();
  serve_cmd->add_option("--instance-dir", serve.instance_dir, "Directory of game JSON files");
  serve_cmd->add_option("--static-dir", serve.static_dir, "UI assets served at /");
  serve_cmd->add_flag("--persist", serve.persist, "Write session snapshots on shutdown");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? cli::kExitSuccess : cli::kExitError;
  }

  if (*solve_cmd) return cli::cmd_solve(solve, std::cout, std::cerr);
  if (*convert_cmd) return cli::cmd_convert(convert, std::cout, std::cerr);
  if (*gen_cmd) return cli::cmd_gen(gen, std::cout, std::cerr);
  if (*eq_cmd) return cli::cmd_check_equivalence(eq, std::cout, std::cerr);
  if (*serve_cmd) return cli::cmd_serve(serve, std::cout, std::cerr);
  return cli::kExitError;
}
