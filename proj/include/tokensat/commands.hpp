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

#pragma once

#include <ostream>
#include <string>

#include "tokensat/equivalence.hpp"
#include "tokensat/generators.hpp"
#include "tokensat/local_search.hpp"

namespace tokensat::cli {

// SAT-competition convention on decision paths.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitSatisfiable = 10;
inline constexpr int kExitUnsatisfiable = 20;

enum class Engine { Brute, Dpll, Local };

struct SolveOptions {
  std::string path;
  Engine engine = Engine::Dpll;
  SearchConfig search;
};

// Prints "s ..." and, when satisfiable, a "v ... 0" model line.
int cmd_solve(const SolveOptions& options, std::ostream& out, std::ostream& err);

enum class Direction { CnfToGame, GameToCnf };

struct ConvertOptions {
  std::string input;
  Direction direction = Direction::CnfToGame;
  std::string output;  // empty: write to `out`
};

int cmd_convert(const ConvertOptions& options, std::ostream& out, std::ostream& err);

struct GenOptions {
  GenSpec spec;
  bool planted = false;
};

int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err);

int cmd_check_equivalence(const EquivalenceOptions& options, std::ostream& out, std::ostream& err);

struct ServeOptions {
  std::string host = "0.0.0.0";
  int port = 8080;
  std::string instance_dir;
  std::string static_dir;
  bool persist = false;
};

// Blocks until SIGINT or SIGTERM.
int cmd_serve(const ServeOptions& options, std::ostream& out, std::ostream& err);

}  // namespace tokensat::cli
