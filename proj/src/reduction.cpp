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

#include "tokensat/reduction.hpp"

#include <optional>

namespace tokensat {

Token literal_to_token(Literal lit) {
  return Token{Color{lit.variable().id}, lit.positive() ? Shape::Square : Shape::Round};
}

Literal token_to_literal(Token token) {
  return Literal(Variable{token.color.id}, token.shape == Shape::Square);
}

GameInstance encode(const CnfFormula& formula) {
  GameInstance instance(formula.num_variables());
  for (const Clause& clause : formula.clauses()) {
    Box box;
    box.reserve(clause.size());
    for (Literal lit : clause) box.push_back(literal_to_token(lit));
    instance.add_box(std::move(box));
  }
  return instance;
}

CnfFormula decode(const GameInstance& instance) {
  CnfFormula formula(instance.num_colors());
  for (const Box& box : instance.boxes()) {
    Clause clause;
    clause.reserve(box.size());
    for (const Token& t : box) clause.push_back(token_to_literal(t));
    formula.add_clause(std::move(clause));
  }
  return formula;
}

ShapeDecision interpretation_to_decision(const Interpretation& interp) {
  ShapeDecision decision(interp.num_variables());
  for (uint32_t v = 1; v <= interp.num_variables(); ++v)
    decision.set_removed(Color{v}, interp.value(Variable{v}) ? Shape::Round : Shape::Square);
  return decision;
}

Interpretation decision_to_interpretation(const ShapeDecision& decision) {
  Interpretation interp(decision.num_colors());
  for (uint32_t c = 1; c <= decision.num_colors(); ++c)
    interp.set(Variable{c}, decision.removed(Color{c}) == Shape::Round);
  return interp;
}

VariantPlay original_solution_to_variant_play(const GameInstance& instance,
                                              const ShapeDecision& decision) {
  if (!apply_decision(instance, decision).won)
    throw NotASolution("decision does not win the original game");

  std::vector<VariantMove> moves;
  for (size_t i = 0; i < instance.num_boxes(); ++i) {
    const Box& box = instance.boxes()[i];
    size_t keep = box.size();
    for (size_t j = 0; j < box.size(); ++j) {
      if (box[j].shape != decision.removed(box[j].color)) {
        keep = j;
        break;
      }
    }
    for (size_t j = 0; j < box.size(); ++j)
      if (j != keep) moves.push_back(VariantMove{i, box[j]});
  }

  auto shared = std::make_shared<const GameInstance>(instance);
  VariantState final = replay_variant(shared, moves);
  bool verified = variant_is_won(final);
  return VariantPlay{std::move(moves), std::move(final),
                     {SolutionKind::ShapeDecision, SolutionKind::VariantFinalState, verified}};
}

DecisionMapping variant_final_to_decision(const GameInstance& instance, const VariantState& final) {
  if (!variant_is_terminal(final)) throw NotASolution("variant state is not terminal");
  if (!variant_is_won(final)) throw NotASolution("variant state is not won");

  ShapeDecision decision(instance.num_colors(), Shape::Round);
  for (const Box& box : final.remaining())
    for (const Token& t : box) decision.set_removed(t.color, opposite(t.shape));

  bool verified = apply_decision(instance, decision).won;
  return DecisionMapping{std::move(decision),
                         {SolutionKind::VariantFinalState, SolutionKind::ShapeDecision, verified}};
}

SolutionMappingReport check_model_mapping(const CnfFormula& formula, const Interpretation& model) {
  bool verified = evaluate(formula, model) &&
                  apply_decision(encode(formula), interpretation_to_decision(model)).won;
  return {SolutionKind::FormulaModel, SolutionKind::ShapeDecision, verified};
}

}  // namespace tokensat
