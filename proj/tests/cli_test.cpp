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

#include <gtest/gtest.h>

#include <random>

#include "cli_support.hpp"
#include "oracles.hpp"
#include "tokensat/dimacs.hpp"
#include "tokensat/game_json.hpp"

namespace tokensat {
namespace {

using testing::kContradiction;
using testing::kTutorialDimacs;
using testing::run_cli;
using testing::write_temp;

TEST(CliSolveTest, TutorialWithEveryEngine) {
  auto path = write_temp("tutorial.cnf", kTutorialDimacs).string();
  for (const char* engine : {"brute", "dpll"}) {
    auto r = run_cli("solve " + path + " --engine " + engine);
    EXPECT_EQ(r.exit_code, 10);
    EXPECT_EQ(r.out, "s SATISFIABLE\nv 1 2 -3 4 0\n");
  }
  auto local = run_cli("solve " + path + " --engine local --seed 3");
  EXPECT_EQ(local.exit_code, 10);
  EXPECT_NE(local.out.find("s SATISFIABLE\nv 1 2 -3 4 0\n"), std::string::npos);
}

TEST(CliSolveTest, Contradiction) {
  auto path = write_temp("contra.cnf", kContradiction).string();
  auto brute = run_cli("solve " + path + " --engine brute");
  EXPECT_EQ(brute.exit_code, 20);
  EXPECT_EQ(brute.out, "s UNSATISFIABLE\n");
  EXPECT_EQ(run_cli("solve " + path + " --engine dpll").exit_code, 20);
  auto local = run_cli("solve " + path + " --engine local --max-flips 100 --restarts 2");
  EXPECT_EQ(local.exit_code, 0);
  EXPECT_NE(local.out.find("s UNKNOWN\n"), std::string::npos);
}

TEST(CliSolveTest, Errors) {
  EXPECT_EQ(run_cli("solve /nonexistent.cnf").exit_code, 1);
  auto bad = write_temp("bad.cnf", "p cnf 1 1\n2 0\n").string();
  EXPECT_EQ(run_cli("solve " + bad).exit_code, 1);
  EXPECT_EQ(run_cli("solve " + bad + " --engine magic").exit_code, 1);
  EXPECT_EQ(run_cli("").exit_code, 1);
  auto big = write_temp("big.cnf", "p cnf 30 0\n").string();
  EXPECT_EQ(run_cli("solve " + big + " --engine brute").exit_code, 1);
}

TEST(CliSolveTest, SeedFallsBackToEnvironment) {
  auto path = write_temp("planted.cnf", run_cli("gen -n 40 -m 170 -k 3 --seed 5").out).string();
  auto a = run_cli("solve " + path + " --engine local --seed 77");
  auto b = testing::RunResult{};
  {
    std::string command = "TOKENSAT_SEED=77 " + std::string(TOKENSAT_BINARY) + " solve " + path +
                          " --engine local";
    FILE* pipe = popen(command.c_str(), "r");
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) b.out.append(buf, n);
    pclose(pipe);
  }
  EXPECT_EQ(a.out, b.out);
}

TEST(CliConvertTest, Tutorial) {
  auto path = write_temp("tutorial.cnf", kTutorialDimacs).string();
  auto r = run_cli("convert " + path + " --direction cnf2game");
  ASSERT_EQ(r.exit_code, 0);
  GameInstance g = parse_game(r.out);
  EXPECT_EQ(g.num_boxes(), 7u);
  EXPECT_EQ(g.num_tokens(), 18u);

  auto game = write_temp("tutorial.json", r.out).string();
  auto out = (std::filesystem::temp_directory_path() / "tokensat_cli" / "back.cnf").string();
  ASSERT_EQ(run_cli("convert " + game + " --direction game2cnf -o " + out).exit_code, 0);
  EXPECT_EQ(testing::read_file(out), kTutorialDimacs);
}

TEST(CliConvertTest, EmptyFormula) {
  auto path = write_temp("empty.cnf", "p cnf 0 0\n").string();
  EXPECT_EQ(run_cli("convert " + path + " --direction cnf2game").out, "{\"numColors\":0,\"boxes\":[]}\n");
}

TEST(CliConvertTest, FormatErrors) {
  auto notjson = write_temp("x.json", "{").string();
  EXPECT_EQ(run_cli("convert " + notjson + " --direction game2cnf").exit_code, 1);
  auto notcnf = write_temp("x.cnf", "hello").string();
  EXPECT_EQ(run_cli("convert " + notcnf + " --direction cnf2game").exit_code, 1);
  EXPECT_EQ(run_cli("convert " + notcnf + " --direction sideways").exit_code, 1);
}

TEST(CliConvertTest, RoundTripsRandomInstances) {
  std::mt19937_64 rng(83);
  for (int i = 0; i < 100; ++i) {
    CnfFormula f = oracle::random_formula(rng, {15, 20, 5, true});
    std::string dimacs = serialize_dimacs(f);
    auto in = write_temp("rt.cnf", dimacs).string();
    auto game = run_cli("convert " + in + " --direction cnf2game");
    ASSERT_EQ(game.exit_code, 0);
    auto gpath = write_temp("rt.json", game.out).string();
    auto back = run_cli("convert " + gpath + " --direction game2cnf");
    ASSERT_EQ(back.exit_code, 0);
    ASSERT_EQ(back.out, dimacs);
  }
}

TEST(CliGenTest, DeterministicAndPlanted) {
  auto a = run_cli("gen -n 20 -m 60 -k 3 --seed 9");
  auto b = run_cli("gen -n 20 -m 60 -k 3 --seed 9");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);

  auto planted = run_cli("gen -n 20 -m 60 -k 3 --seed 9 --planted");
  ASSERT_EQ(planted.out.rfind("c planted:", 0), 0u);
  CnfFormula f = parse_dimacs(planted.out);
  std::string line = planted.out.substr(0, planted.out.find('\n'));
  CnfFormula comment_model = parse_dimacs("p cnf 20 1\n" + line.substr(std::string("c planted:").size()));
  Interpretation hidden(20);
  for (Literal l : comment_model.clauses()[0]) hidden.set(l.variable(), l.positive());
  EXPECT_EQ(comment_model.clauses()[0].size(), 20u);
  EXPECT_TRUE(evaluate(f, hidden));
}

TEST(CliGenTest, InvalidFlags) {
  EXPECT_EQ(run_cli("gen -n 2 -m 5 -k 3").exit_code, 1);
  EXPECT_EQ(run_cli("gen -m 5").exit_code, 1);
}

TEST(CliCheckEquivalenceTest, DefaultBattery) {
  auto r = run_cli("check-equivalence");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("exhaustive instances: 26644"), std::string::npos);
  EXPECT_NE(r.out.find("random instances: 500"), std::string::npos);
  EXPECT_NE(r.out.find("discrepancies: 0"), std::string::npos);
  EXPECT_NE(r.out.find("original oracle:"), std::string::npos);
  EXPECT_NE(r.out.find("variant oracle:"), std::string::npos);
}

}  // namespace
}  // namespace tokensat
