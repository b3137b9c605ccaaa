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

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tokensat/cnf.hpp"

namespace tokensat {

// Color ids are 1-based and line up with variable ids under the reduction.
struct Color {
  uint32_t id = 1;

  friend bool operator==(Color, Color) = default;
  friend auto operator<=>(Color, Color) = default;
};

enum class Shape : uint8_t { Square, Round };

constexpr Shape opposite(Shape s) { return s == Shape::Square ? Shape::Round : Shape::Square; }
std::string_view to_string(Shape s);
std::optional<Shape> parse_shape(std::string_view text);

struct Token {
  Color color;
  Shape shape = Shape::Square;

  friend bool operator==(const Token&, const Token&) = default;
};

// Tokens in their original order; a multiset with multiplicity.
using Box = std::vector<Token>;

class GameInstance {
 public:
  GameInstance() = default;
  explicit GameInstance(uint32_t num_colors) : num_colors_(num_colors) {}
  GameInstance(uint32_t num_colors, std::vector<Box> boxes);

  uint32_t num_colors() const { return num_colors_; }
  const std::vector<Box>& boxes() const { return boxes_; }
  size_t num_boxes() const { return boxes_.size(); }
  size_t num_tokens() const;
  bool has_empty_box() const;

  // Throws ContractViolation on a color outside 1..num_colors.
  void add_box(Box box);

  friend bool operator==(const GameInstance&, const GameInstance&) = default;

 private:
  uint32_t num_colors_ = 0;
  std::vector<Box> boxes_;
};

// For each color, the shape that is taken off the board.
class ShapeDecision {
 public:
  ShapeDecision() = default;
  explicit ShapeDecision(uint32_t num_colors, Shape removed = Shape::Round)
      : removed_(num_colors, removed) {}
  explicit ShapeDecision(std::vector<Shape> removed) : removed_(std::move(removed)) {}

  uint32_t num_colors() const { return static_cast<uint32_t>(removed_.size()); }
  Shape removed(Color c) const;
  Shape kept(Color c) const { return opposite(removed(c)); }
  void set_removed(Color c, Shape s);

  friend bool operator==(const ShapeDecision&, const ShapeDecision&) = default;

 private:
  std::vector<Shape> removed_;
};

struct DecisionOutcome {
  std::vector<Box> boxes;
  bool won = false;
};

// Removes, as one set operation, every token whose shape is the removed
// shape of its color. Won iff no box ends up empty.
DecisionOutcome apply_decision(const GameInstance& instance, const ShapeDecision& decision);

// Removes all tokens of one (color, shape) pair from every box.
void remove_all(std::vector<Box>& boxes, Color color, Shape shape);

// ---------------------------------------------------------------------------
// Variant rules: one token at a time, until every box holds exactly one.

enum class MoveError { TokenNotPresent, BoxAtOneToken, ColorAlreadyDecided, GameOver };

std::string_view to_string(MoveError e);

class IllegalMove : public std::runtime_error {
 public:
  explicit IllegalMove(MoveError reason)
      : std::runtime_error(std::string(to_string(reason))), reason_(reason) {}

  MoveError reason() const { return reason_; }

 private:
  MoveError reason_;
};

struct VariantMove {
  size_t box_index = 0;
  Token token;

  friend bool operator==(const VariantMove&, const VariantMove&) = default;
};

class VariantState {
 public:
  explicit VariantState(std::shared_ptr<const GameInstance> instance);
  explicit VariantState(const GameInstance& instance)
      : VariantState(std::make_shared<const GameInstance>(instance)) {}

  const GameInstance& instance() const { return *instance_; }
  const std::shared_ptr<const GameInstance>& shared_instance() const { return instance_; }
  const std::vector<Box>& remaining() const { return remaining_; }
  const std::vector<VariantMove>& history() const { return history_; }
  size_t num_tokens() const;

  // In-place form of variant_apply_move; the state is unchanged on error.
  void apply(const VariantMove& move);

 private:
  std::shared_ptr<const GameInstance> instance_;
  std::vector<Box> remaining_;
  std::vector<VariantMove> history_;
};

// Throws IllegalMove (GameOver, TokenNotPresent, BoxAtOneToken) or
// ContractViolation for a box index out of range.
VariantState variant_apply_move(const VariantState& state, const VariantMove& move);

bool variant_is_terminal(const VariantState& state);
bool variant_is_won(const VariantState& state);

// Moves accepted by variant_apply_move, one per distinct (box, token).
std::vector<VariantMove> legal_variant_moves(const VariantState& state);

// Replays moves from the initial board; throws on the first illegal one.
VariantState replay_variant(std::shared_ptr<const GameInstance> instance,
                            const std::vector<VariantMove>& moves);

// True iff, per color, all tokens across the boxes share one shape.
bool shapes_consistent(const std::vector<Box>& boxes, uint32_t num_colors);

}  // namespace tokensat
