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

#include <algorithm>

namespace tokensat {

std::string_view to_string(Shape s) { return s == Shape::Square ? "square" : "round"; }

std::optional<Shape> parse_shape(std::string_view text) {
  if (text == "square") return Shape::Square;
  if (text == "round") return Shape::Round;
  return std::nullopt;
}

std::string_view to_string(MoveError e) {
  switch (e) {
    case MoveError::TokenNotPresent: return "token-not-present";
    case MoveError::BoxAtOneToken: return "box-at-one-token";
    case MoveError::ColorAlreadyDecided: return "color-already-decided";
    case MoveError::GameOver: return "game-over";
  }
  return "unknown";
}

GameInstance::GameInstance(uint32_t num_colors, std::vector<Box> boxes) : num_colors_(num_colors) {
  boxes_.reserve(boxes.size());
  for (auto& b : boxes) add_box(std::move(b));
}

size_t GameInstance::num_tokens() const {
  size_t total = 0;
  for (const auto& b : boxes_) total += b.size();
  return total;
}

bool GameInstance::has_empty_box() const {
  return std::any_of(boxes_.begin(), boxes_.end(), [](const Box& b) { return b.empty(); });
}

void GameInstance::add_box(Box box) {
  for (const Token& t : box) {
    if (t.color.id == 0 || t.color.id > num_colors_)
      throw ContractViolation("token color " + std::to_string(t.color.id) + " outside 1.." +
                              std::to_string(num_colors_));
  }
  boxes_.push_back(std::move(box));
}

Shape ShapeDecision::removed(Color c) const {
  if (c.id == 0 || c.id > removed_.size())
    throw ContractViolation("decision has no entry for color " + std::to_string(c.id));
  return removed_[c.id - 1];
}

void ShapeDecision::set_removed(Color c, Shape s) {
  if (c.id == 0 || c.id > removed_.size())
    throw ContractViolation("decision has no entry for color " + std::to_string(c.id));
  removed_[c.id - 1] = s;
}

DecisionOutcome apply_decision(const GameInstance& instance, const ShapeDecision& decision) {
  if (decision.num_colors() < instance.num_colors())
    throw ContractViolation("decision covers " + std::to_string(decision.num_colors()) + " of " +
                            std::to_string(instance.num_colors()) + " colors");
  DecisionOutcome out;
  out.boxes.reserve(instance.num_boxes());
  out.won = true;
  for (const Box& box : instance.boxes()) {
    Box kept;
    for (const Token& t : box)
      if (t.shape != decision.removed(t.color)) kept.push_back(t);
    if (kept.empty()) out.won = false;
    out.boxes.push_back(std::move(kept));
  }
  return out;
}

void remove_all(std::vector<Box>& boxes, Color color, Shape shape) {
  for (Box& box : boxes)
    std::erase_if(box, [&](const Token& t) { return t.color == color && t.shape == shape; });
}

VariantState::VariantState(std::shared_ptr<const GameInstance> instance)
    : instance_(std::move(instance)), remaining_(instance_->boxes()) {}

size_t VariantState::num_tokens() const {
  size_t total = 0;
  for (const auto& b : remaining_) total += b.size();
  return total;
}

void VariantState::apply(const VariantMove& move) {
  if (variant_is_terminal(*this)) throw IllegalMove(MoveError::GameOver);
  if (move.box_index >= remaining_.size())
    throw ContractViolation("box index " + std::to_string(move.box_index) + " out of range");
  Box& box = remaining_[move.box_index];
  auto it = std::find(box.begin(), box.end(), move.token);
  if (it == box.end()) throw IllegalMove(MoveError::TokenNotPresent);
  if (box.size() < 2) throw IllegalMove(MoveError::BoxAtOneToken);
  box.erase(it);
  history_.push_back(move);
}

VariantState variant_apply_move(const VariantState& state, const VariantMove& move) {
  VariantState next = state;
  next.apply(move);
  return next;
}

bool variant_is_terminal(const VariantState& state) {
  return std::all_of(state.remaining().begin(), state.remaining().end(),
                     [](const Box& b) { return b.size() == 1; });
}

bool shapes_consistent(const std::vector<Box>& boxes, uint32_t num_colors) {
  // Bit 0: seen square, bit 1: seen round.
  std::vector<uint8_t> seen(num_colors + 1, 0);
  for (const Box& box : boxes) {
    for (const Token& t : box) {
      if (t.color.id > num_colors) return false;
      seen[t.color.id] |= t.shape == Shape::Square ? 1 : 2;
      if (seen[t.color.id] == 3) return false;
    }
  }
  return true;
}

bool variant_is_won(const VariantState& state) {
  return variant_is_terminal(state) &&
         shapes_consistent(state.remaining(), state.instance().num_colors());
}

std::vector<VariantMove> legal_variant_moves(const VariantState& state) {
  std::vector<VariantMove> moves;
  if (variant_is_terminal(state)) return moves;
  for (size_t i = 0; i < state.remaining().size(); ++i) {
    const Box& box = state.remaining()[i];
    if (box.size() < 2) continue;
    for (size_t j = 0; j < box.size(); ++j) {
      if (std::find(box.begin(), box.begin() + j, box[j]) != box.begin() + j) continue;
      moves.push_back(VariantMove{i, box[j]});
    }
  }
  return moves;
}

VariantState replay_variant(std::shared_ptr<const GameInstance> instance,
                            const std::vector<VariantMove>& moves) {
  VariantState state(std::move(instance));
  for (const VariantMove& m : moves) state.apply(m);
  return state;
}

}  // namespace tokensat
