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

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tokensat/cnf.hpp"
#include "tokensat/game.hpp"

namespace tokensat {

enum class Outcome { Satisfiable, Unsatisfiable, Unknown };

struct SolveStats {
  uint64_t flips = 0;
  uint64_t restarts = 0;
  std::chrono::nanoseconds wall_time{0};
};

class SolveResult {
 public:
  // Throws std::logic_error if the model does not satisfy the formula.
  static SolveResult satisfiable(const CnfFormula& formula, Interpretation model,
                                 SolveStats stats = {});
  static SolveResult unsatisfiable(SolveStats stats = {}) {
    return SolveResult(Outcome::Unsatisfiable, std::nullopt, stats);
  }
  static SolveResult unknown(SolveStats stats = {}) {
    return SolveResult(Outcome::Unknown, std::nullopt, stats);
  }

  Outcome outcome() const { return outcome_; }
  bool is_sat() const { return outcome_ == Outcome::Satisfiable; }
  // Present iff outcome() == Satisfiable.
  const std::optional<Interpretation>& model() const { return model_; }
  const SolveStats& stats() const { return stats_; }
  SolveStats& stats() { return stats_; }

 private:
  SolveResult(Outcome o, std::optional<Interpretation> m, SolveStats s)
      : outcome_(o), model_(std::move(m)), stats_(s) {}

  Outcome outcome_;
  std::optional<Interpretation> model_;
  SolveStats stats_;
};

const char* to_string(Outcome o);

class GuardViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr uint32_t kBruteForceMaxVariables = 24;
inline constexpr uint64_t kVariantMaxKeepSets = 1'000'000;

// Visits interpretations in lexicographic order (variable 1 most significant,
// false before true); the visitor returns false to stop.
void enumerate_interpretations(uint32_t num_variables,
                               const std::function<bool(const Interpretation&)>& visit);

// First model in lexicographic order, or Unsatisfiable.
SolveResult brute_force_sat(const CnfFormula& formula);

// Decisions in the same order, evaluated directly on the board.
void enumerate_decisions(uint32_t num_colors,
                         const std::function<bool(const ShapeDecision&)>& visit);
std::optional<ShapeDecision> brute_force_game_original(const GameInstance& instance);

struct KeepSetCensus {
  uint64_t scanned = 0;
  uint64_t consistent = 0;
};

// Searches the keep-one-token-per-box space. Returns the first consistent
// keep set, realized as a terminal state by variant moves.
std::optional<VariantState> brute_force_game_variant(const GameInstance& instance);
KeepSetCensus variant_keep_set_census(const GameInstance& instance);

// Unit propagation, then branch on the lowest unassigned variable with
// true tried first.
SolveResult dpll(const CnfFormula& formula);

// Partial original-game play: removed shape per color, or nullopt.
using PartialDecision = std::vector<std::optional<Shape>>;

// One (color, removed shape) extension of the partial decision that keeps
// the instance winnable, or nullopt if none does.
std::optional<std::pair<Color, Shape>> hint_original(const GameInstance& instance,
                                                     const PartialDecision& partial);

}  // namespace tokensat
