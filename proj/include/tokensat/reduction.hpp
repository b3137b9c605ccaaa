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

#include <stdexcept>
#include <vector>

#include "tokensat/cnf.hpp"
#include "tokensat/game.hpp"

namespace tokensat {

// Box i holds one token per literal of clause i, in literal order: a
// positive literal becomes a square token, a negative one a round token.
GameInstance encode(const CnfFormula& formula);
CnfFormula decode(const GameInstance& instance);

Token literal_to_token(Literal lit);
Literal token_to_literal(Token token);

// A true variable removes its round tokens, so squares of true variables
// survive exactly like satisfied positive literals.
ShapeDecision interpretation_to_decision(const Interpretation& interp);
Interpretation decision_to_interpretation(const ShapeDecision& decision);

enum class SolutionKind { FormulaModel, ShapeDecision, VariantFinalState };

struct SolutionMappingReport {
  SolutionKind source;
  SolutionKind target;
  // Target re-checked with its own domain's evaluate/win operation.
  bool verified = false;
};

// Raised when a transform's input is not a solution.
class NotASolution : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct VariantPlay {
  std::vector<VariantMove> moves;
  VariantState final_state;
  SolutionMappingReport report;
};

// From a winning decision, removes every token but one from each box,
// keeping the first token that survives the decision.
VariantPlay original_solution_to_variant_play(const GameInstance& instance,
                                              const ShapeDecision& decision);

struct DecisionMapping {
  ShapeDecision decision;
  SolutionMappingReport report;
};

// From a won variant terminal state, keeps each color's surviving shape and
// removes the other. Colors absent from the final board remove Round.
DecisionMapping variant_final_to_decision(const GameInstance& instance, const VariantState& final);

// Re-checks that a model maps to a winning decision of encode(formula).
SolutionMappingReport check_model_mapping(const CnfFormula& formula, const Interpretation& model);

}  // namespace tokensat
