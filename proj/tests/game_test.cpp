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

#include "tokensat/game.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "tokensat/generators.hpp"
#include "tokensat/reduction.hpp"

namespace tokensat {
namespace {

constexpr Color r{1}, b{2}, p{3}, y{4};
Token sq(Color c) { return Token{c, Shape::Square}; }
Token rd(Color c) { return Token{c, Shape::Round}; }

ShapeDecision tutorial_winning_decision() {
  return ShapeDecision({Shape::Round, Shape::Round, Shape::Square, Shape::Round});
}

IllegalMove capture(const VariantState& s, const VariantMove& m) {
  try {
    variant_apply_move(s, m);
  } catch (const IllegalMove& e) {
    return e;
  }
  ADD_FAILURE() << "move was accepted";
  return IllegalMove(MoveError::GameOver);
}

TEST(ApplyDecisionTest, TutorialWins) {
  GameInstance g = encode(paper_example());
  DecisionOutcome out = apply_decision(g, tutorial_winning_decision());
  EXPECT_TRUE(out.won);
  ASSERT_EQ(out.boxes.size(), 7u);
  for (const Box& box : out.boxes) EXPECT_FALSE(box.empty());
  EXPECT_EQ(out.boxes[4], (Box{sq(y)}));  // (p | y) keeps only square y
}

TEST(ApplyDecisionTest, BoxCanEmpty) {
  GameInstance g(4, {{sq(p), sq(y)}});
  ShapeDecision d(4, Shape::Round);
  d.set_removed(p, Shape::Square);
  d.set_removed(y, Shape::Square);
  DecisionOutcome out = apply_decision(g, d);
  EXPECT_TRUE(out.boxes[0].empty());
  EXPECT_FALSE(out.won);
}

TEST(ApplyDecisionTest, EmptyBoxAlwaysLoses) {
  GameInstance g(2, {{sq(r)}, {}});
  for (uint64_t mask = 0; mask < 4; ++mask) {
    ShapeDecision d(2);
    d.set_removed(r, (mask & 1) ? Shape::Round : Shape::Square);
    d.set_removed(b, (mask & 2) ? Shape::Round : Shape::Square);
    EXPECT_FALSE(apply_decision(g, d).won);
  }
}

TEST(ApplyDecisionTest, ZeroBoxesWinVacuously) {
  EXPECT_TRUE(apply_decision(GameInstance(3), ShapeDecision(3)).won);
}

TEST(ApplyDecisionTest, MissingColorIsAContractViolation) {
  GameInstance g(2, {{sq(r), rd(b)}});
  EXPECT_THROW(apply_decision(g, ShapeDecision(1)), ContractViolation);
}

TEST(ApplyDecisionTest, SetOperationMatchesAnyRemovalOrder) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    GameInstance g = oracle::random_game(rng, 6, 6, 4);
    ShapeDecision d(g.num_colors());
    for (uint32_t c = 1; c <= g.num_colors(); ++c)
      d.set_removed(Color{c}, rng() & 1 ? Shape::Round : Shape::Square);
    DecisionOutcome expected = apply_decision(g, d);

    std::vector<uint32_t> order(g.num_colors());
    for (uint32_t c = 0; c < order.size(); ++c) order[c] = c + 1;
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<Box> boxes = g.boxes();
      for (uint32_t c : order) remove_all(boxes, Color{c}, d.removed(Color{c}));
      ASSERT_EQ(boxes, expected.boxes);
      bool won = std::none_of(boxes.begin(), boxes.end(), [](const Box& x) { return x.empty(); });
      ASSERT_EQ(won, expected.won);
    }
  }
}

TEST(VariantMoveTest, RemovesOneMatchingToken) {
  VariantState s(GameInstance(2, {{sq(r), rd(r), sq(b)}}));
  VariantState next = variant_apply_move(s, {0, rd(r)});
  EXPECT_EQ(next.remaining()[0], (Box{sq(r), sq(b)}));
  EXPECT_EQ(next.history().size(), 1u);
  EXPECT_EQ(s.remaining()[0].size(), 3u);  // original state untouched
}

TEST(VariantMoveTest, DuplicateTokensLoseOneOccurrence) {
  VariantState s(GameInstance(1, {{sq(r), sq(r), sq(r)}}));
  VariantState next = variant_apply_move(s, {0, sq(r)});
  EXPECT_EQ(next.remaining()[0], (Box{sq(r), sq(r)}));
}

TEST(VariantMoveTest, LastTokenOfABoxCannotBeRemoved) {
  VariantState s(GameInstance(1, {{sq(r)}, {sq(r), rd(r)}}));
  EXPECT_EQ(capture(s, {0, sq(r)}).reason(), MoveError::BoxAtOneToken);
}

TEST(VariantMoveTest, AbsentTokenIsRejected) {
  VariantState s(GameInstance(2, {{sq(r), sq(b)}}));
  EXPECT_EQ(capture(s, {0, rd(b)}).reason(), MoveError::TokenNotPresent);
}

TEST(VariantMoveTest, TerminalStateRejectsMoves) {
  VariantState s(GameInstance(1, {{sq(r)}}));
  EXPECT_EQ(capture(s, {0, sq(r)}).reason(), MoveError::GameOver);
  EXPECT_EQ(to_string(MoveError::GameOver), "game-over");
}

TEST(VariantMoveTest, BoxIndexOutOfRange) {
  VariantState s(GameInstance(1, {{sq(r), rd(r)}}));
  EXPECT_THROW(variant_apply_move(s, {3, sq(r)}), ContractViolation);
}

TEST(VariantTerminalTest, Definitions) {
  EXPECT_TRUE(variant_is_terminal(VariantState(GameInstance(2, {{sq(r)}, {rd(b)}}))));
  EXPECT_FALSE(variant_is_terminal(VariantState(GameInstance(2, {{sq(r)}, {rd(b), sq(b)}}))));
  EXPECT_TRUE(variant_is_terminal(VariantState(GameInstance(0))));
  EXPECT_FALSE(variant_is_terminal(VariantState(GameInstance(1, {{}}))));
}

TEST(VariantWonTest, Definitions) {
  EXPECT_TRUE(variant_is_won(VariantState(GameInstance(2, {{sq(r)}, {sq(r)}, {rd(b)}}))));
  EXPECT_FALSE(variant_is_won(VariantState(GameInstance(1, {{sq(r)}, {rd(r)}}))));
  // Consistent but not terminal.
  EXPECT_FALSE(variant_is_won(VariantState(GameInstance(2, {{sq(r), sq(b)}}))));
  EXPECT_TRUE(variant_is_won(VariantState(GameInstance(0))));
}

TEST(LegalMovesTest, Examples) {
  EXPECT_TRUE(legal_variant_moves(VariantState(GameInstance(1, {{sq(r)}}))).empty());
  auto two = legal_variant_moves(VariantState(GameInstance(1, {{sq(r), rd(r)}})));
  EXPECT_EQ(two, (std::vector<VariantMove>{{0, sq(r)}, {0, rd(r)}}));
  auto dedup = legal_variant_moves(VariantState(GameInstance(2, {{sq(r), sq(r), rd(b)}})));
  EXPECT_EQ(dedup, (std::vector<VariantMove>{{0, sq(r)}, {0, rd(b)}}));
}

// Random walks through variant play checking the state invariants.
TEST(VariantPropertyTest, RandomPlays) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    GameInstance g = oracle::random_game(rng, 5, 6, 4);
    auto shared = std::make_shared<const GameInstance>(g);
    VariantState s(shared);
    while (true) {
      auto moves = legal_variant_moves(s);
      // Legal list is exact: each listed move is accepted, and no
      // other token in any box is.
      for (size_t bi = 0; bi < s.remaining().size(); ++bi) {
        for (const Token& t : s.remaining()[bi]) {
          bool listed = std::find(moves.begin(), moves.end(), VariantMove{bi, t}) != moves.end();
          bool accepted = true;
          try {
            variant_apply_move(s, {bi, t});
          } catch (const IllegalMove&) {
            accepted = false;
          }
          ASSERT_EQ(listed, accepted);
        }
      }
      if (variant_is_won(s)) ASSERT_TRUE(variant_is_terminal(s));
      if (moves.empty()) break;
      size_t before = s.num_tokens();
      std::vector<Box> old = s.remaining();
      s.apply(moves[rng() % moves.size()]);
      ASSERT_EQ(s.num_tokens(), before - 1);
      for (size_t bi = 0; bi < old.size(); ++bi) ASSERT_LE(s.remaining()[bi].size(), old[bi].size());
      ASSERT_EQ(replay_variant(shared, s.history()).remaining(), s.remaining());
    }
    // Maximal plays end terminal unless a box started empty.
    ASSERT_EQ(variant_is_terminal(s), !g.has_empty_box());
    if (variant_is_terminal(s)) ASSERT_EQ(s.num_tokens(), g.num_boxes());
  }
}

TEST(ShapeTest, Strings) {
  EXPECT_EQ(to_string(Shape::Square), "square");
  EXPECT_EQ(parse_shape("round"), Shape::Round);
  EXPECT_FALSE(parse_shape("Round").has_value());
  EXPECT_EQ(opposite(Shape::Round), Shape::Square);
}

}  // namespace
}  // namespace tokensat
