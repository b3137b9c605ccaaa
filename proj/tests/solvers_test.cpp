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

#include "tokensat/solvers.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "tokensat/generators.hpp"
#include "tokensat/reduction.hpp"

namespace tokensat {
namespace {

constexpr Color r{1}, b{2}, p{3}, y{4};
Token sq(Color c) { return Token{c, Shape::Square}; }
Token rd(Color c) { return Token{c, Shape::Round}; }
Literal lit(int v) { return Literal::from_dimacs(v); }

const Interpretation kTutorialModel(std::vector<bool>{true, true, false, true});

TEST(BruteForceSatTest, Contradiction) {
  EXPECT_EQ(brute_force_sat(CnfFormula(1, {{lit(1)}, {lit(-1)}})).outcome(), Outcome::Unsatisfiable);
}

TEST(BruteForceSatTest, EmptyFormula) {
  SolveResult res = brute_force_sat(CnfFormula());
  ASSERT_TRUE(res.is_sat());
  EXPECT_EQ(res.model()->num_variables(), 0u);
}

TEST(BruteForceSatTest, TutorialUniqueModel) {
  SolveResult res = brute_force_sat(paper_example());
  ASSERT_TRUE(res.is_sat());
  EXPECT_EQ(*res.model(), kTutorialModel);
  int models = 0;
  enumerate_interpretations(4, [&](const Interpretation& i) {
    models += evaluate(paper_example(), i);
    return true;
  });
  EXPECT_EQ(models, 1);
  EXPECT_EQ(oracle::all_models(oracle::to_ints(paper_example()), 4), (std::vector<uint64_t>{0b1011}));
}

TEST(BruteForceSatTest, LexicographicOrder) {
  std::vector<std::vector<bool>> seen;
  enumerate_interpretations(2, [&](const Interpretation& i) {
    seen.push_back({i.value(Variable{1}), i.value(Variable{2})});
    return true;
  });
  EXPECT_EQ(seen, (std::vector<std::vector<bool>>{{false, false}, {false, true}, {true, false}, {true, true}}));
  // First model of (x1 | x2) in that order sets only x2.
  SolveResult res = brute_force_sat(CnfFormula(2, {{lit(1), lit(2)}}));
  EXPECT_EQ(*res.model(), Interpretation(std::vector<bool>{false, true}));
}

TEST(BruteForceSatTest, Guard) {
  EXPECT_THROW(brute_force_sat(CnfFormula(25)), GuardViolation);
}

TEST(BruteForceGameTest, Original) {
  auto d = brute_force_game_original(GameInstance(1, {{sq(r)}}));
  ASSERT_TRUE(d);
  EXPECT_EQ(d->removed(r), Shape::Round);
  EXPECT_FALSE(brute_force_game_original(GameInstance(1, {{sq(r)}, {}})));
  EXPECT_THROW(brute_force_game_original(GameInstance(25)), GuardViolation);
}

TEST(BruteForceGameTest, OriginalTutorialHasOneWinningDecision) {
  GameInstance g = encode(paper_example());
  auto d = brute_force_game_original(g);
  ASSERT_TRUE(d);
  EXPECT_EQ(*d, ShapeDecision({Shape::Round, Shape::Round, Shape::Square, Shape::Round}));
  int wins = 0;
  enumerate_decisions(4, [&](const ShapeDecision& x) {
    wins += apply_decision(g, x).won;
    return true;
  });
  EXPECT_EQ(wins, 1);
  EXPECT_EQ(oracle::all_winning_masks(g), (std::vector<uint64_t>{0b1011}));
}

TEST(BruteForceGameTest, Variant) {
  auto one = brute_force_game_variant(GameInstance(1, {{sq(r), rd(r)}}));
  ASSERT_TRUE(one);
  EXPECT_TRUE(variant_is_won(*one));
  EXPECT_FALSE(brute_force_game_variant(GameInstance(1, {{sq(r)}, {rd(r)}})));
  EXPECT_FALSE(brute_force_game_variant(GameInstance(1, {{sq(r)}, {}})));
  auto none = brute_force_game_variant(GameInstance(0));
  ASSERT_TRUE(none);
  EXPECT_TRUE(variant_is_won(*none));
}

TEST(BruteForceGameTest, VariantTutorialCensus) {
  GameInstance g = encode(paper_example());
  auto s = brute_force_game_variant(g);
  ASSERT_TRUE(s);
  EXPECT_TRUE(variant_is_won(*s));
  KeepSetCensus census = variant_keep_set_census(g);
  EXPECT_EQ(census.scanned, 648u);
  EXPECT_EQ(census.consistent, 12u);
}

TEST(BruteForceGameTest, VariantGuard) {
  Box wide(10, sq(r));
  GameInstance g(1, std::vector<Box>(7, wide));  // 10^7 keep sets
  EXPECT_THROW(brute_force_game_variant(g), GuardViolation);
}

TEST(DpllTest, Tutorial) {
  SolveResult res = dpll(paper_example());
  ASSERT_TRUE(res.is_sat());
  EXPECT_EQ(*res.model(), kTutorialModel);
}

TEST(DpllTest, UnitClauseIsForced) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    CnfFormula f = oracle::random_formula(rng, {8, 12, 3, false});
    if (f.num_variables() < 3) continue;
    f.add_clause({lit(3)});
    SolveResult res = dpll(f);
    if (res.is_sat()) ASSERT_TRUE(res.model()->value(Variable{3}));
  }
}

TEST(DpllTest, EdgeCases) {
  EXPECT_TRUE(dpll(CnfFormula()).is_sat());
  EXPECT_EQ(dpll(CnfFormula(2, {{}})).outcome(), Outcome::Unsatisfiable);
  EXPECT_EQ(dpll(CnfFormula(1, {{lit(1)}, {lit(-1)}})).outcome(), Outcome::Unsatisfiable);
  EXPECT_TRUE(dpll(CnfFormula(1, {{lit(1), lit(-1)}})).is_sat());
  EXPECT_EQ(dpll(CnfFormula(1, {{lit(1), lit(1)}, {lit(-1), lit(-1)}})).outcome(),
            Outcome::Unsatisfiable);
}

TEST(DpllTest, AgreesWithBruteForce) {
  std::mt19937_64 rng(37);
  int sat = 0, unsat = 0;
  for (int i = 0; i < 1500; ++i) {
    CnfFormula f = oracle::random_formula(rng, {10, 45, 4, i % 10 == 0});
    bool expected = !oracle::all_models(oracle::to_ints(f), f.num_variables()).empty();
    SolveResult a = dpll(f);
    SolveResult bf = brute_force_sat(f);
    ASSERT_EQ(a.is_sat(), expected);
    ASSERT_EQ(bf.is_sat(), expected);
    if (a.is_sat()) ASSERT_TRUE(evaluate(f, *a.model()));
    (expected ? sat : unsat)++;
  }
  EXPECT_GT(sat, 100);
  EXPECT_GT(unsat, 100);
}

TEST(DpllTest, SolvesPlantedInstancesBeyondBruteForceScale) {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    PlantedInstance pi = planted_sat({60, 255, 3, seed});
    SolveResult res = dpll(pi.formula);
    ASSERT_TRUE(res.is_sat());
    ASSERT_TRUE(evaluate(pi.formula, *res.model()));
  }
}

TEST(SolveResultTest, RejectsNonModels) {
  CnfFormula f(1, {{lit(1)}});
  EXPECT_THROW(SolveResult::satisfiable(f, Interpretation(1, false)), std::logic_error);
}

// The four single-color extensions that keep the tutorial board winnable
// are exactly the four assignments of its unique model.
TEST(HintOriginalTest, Tutorial) {
  GameInstance g = encode(paper_example());
  const std::set<std::pair<uint32_t, Shape>> winning = {
      {1, Shape::Round}, {2, Shape::Round}, {3, Shape::Square}, {4, Shape::Round}};

  std::set<std::pair<uint32_t, Shape>> oracle_set;
  for (uint32_t c = 1; c <= 4; ++c) {
    for (Shape s : {Shape::Square, Shape::Round}) {
      for (uint64_t mask : oracle::all_winning_masks(g)) {
        bool removes_round = (mask >> (c - 1)) & 1u;
        if ((s == Shape::Round) == removes_round) oracle_set.insert({c, s});
      }
    }
  }
  ASSERT_EQ(oracle_set, winning);

  PartialDecision partial(4);
  auto h = hint_original(g, partial);
  ASSERT_TRUE(h);
  EXPECT_TRUE(winning.count({h->first.id, h->second}));

  // Following hints all the way wins.
  for (int step = 0; step < 4; ++step) {
    auto next = hint_original(g, partial);
    ASSERT_TRUE(next);
    ASSERT_TRUE(winning.count({next->first.id, next->second}));
    partial[next->first.id - 1] = next->second;
  }
  EXPECT_FALSE(hint_original(g, partial));  // nothing left to decide
}

TEST(HintOriginalTest, Unwinnable) {
  PartialDecision partial(1);
  EXPECT_FALSE(hint_original(GameInstance(1, {{sq(r)}, {rd(r)}}), partial));
  GameInstance g = encode(paper_example());
  PartialDecision wrong(4);
  wrong[2] = Shape::Round;  // p true: the four (r, b) clauses cannot all hold
  EXPECT_FALSE(hint_original(g, wrong));
}

TEST(HintOriginalTest, SingleBox) {
  auto h = hint_original(GameInstance(1, {{sq(r)}}), PartialDecision(1));
  ASSERT_TRUE(h);
  EXPECT_EQ(h->first, r);
  EXPECT_EQ(h->second, Shape::Round);
}

TEST(HintOriginalTest, AgreesWithBruteForce) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 400; ++i) {
    GameInstance g = oracle::random_game(rng, 6, 8, 3);
    PartialDecision partial(g.num_colors());
    for (auto& slot : partial)
      if (rng() % 3 == 0) slot = rng() & 1 ? Shape::Round : Shape::Square;
    std::vector<Box> boxes = g.boxes();
    for (uint32_t c = 1; c <= g.num_colors(); ++c)
      if (partial[c - 1]) remove_all(boxes, Color{c}, *partial[c - 1]);
    if (std::any_of(boxes.begin(), boxes.end(), [](const Box& x) { return x.empty(); })) continue;

    bool any_undecided = std::count(partial.begin(), partial.end(), std::nullopt) > 0;
    bool extendable = false;
    for (uint64_t mask : oracle::all_winning_masks(g)) {
      bool matches = true;
      for (uint32_t c = 1; c <= g.num_colors(); ++c) {
        Shape removed = (mask >> (c - 1)) & 1u ? Shape::Round : Shape::Square;
        if (partial[c - 1] && *partial[c - 1] != removed) matches = false;
      }
      extendable |= matches;
    }
    auto h = hint_original(g, partial);
    ASSERT_EQ(h.has_value(), extendable && any_undecided);
    if (h) {
      partial[h->first.id - 1] = h->second;
      bool still = false;
      for (uint64_t mask : oracle::all_winning_masks(g)) {
        bool matches = true;
        for (uint32_t c = 1; c <= g.num_colors(); ++c) {
          Shape removed = (mask >> (c - 1)) & 1u ? Shape::Round : Shape::Square;
          if (partial[c - 1] && *partial[c - 1] != removed) matches = false;
        }
        still |= matches;
      }
      ASSERT_TRUE(still);
    }
  }
}

}  // namespace
}  // namespace tokensat
