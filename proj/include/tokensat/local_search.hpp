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
#include <vector>

#include "tokensat/cnf.hpp"
#include "tokensat/random.hpp"
#include "tokensat/solvers.hpp"

namespace tokensat {

// One chosen literal index per clause.
struct Selection {
  std::vector<uint32_t> chosen;

  friend bool operator==(const Selection&, const Selection&) = default;
};

struct SearchConfig {
  uint64_t seed = 0;
  uint64_t max_flips = 100000;  // per restart
  uint64_t max_restarts = 10;
  double noise = 0.5;
  // Restarts run on this many threads; results do not depend on it.
  unsigned threads = 1;

  // Throws std::invalid_argument.
  void validate() const;
};

// Number of variables selected positively by some clause and negatively by
// another. Throws ContractViolation on an out-of-bounds selection.
uint64_t selection_cost(const CnfFormula& formula, const Selection& selection);

// Selected literals made true, all other variables true. Requires cost 0.
Interpretation extract_interpretation(const CnfFormula& formula, const Selection& selection);

// Per-variable polarity counts over the selected literals, kept in step
// with the selection one reselection at a time.
class ConflictLedger {
 public:
  ConflictLedger(const CnfFormula& formula, Selection selection);

  uint64_t cost() const { return conflicting_.size(); }
  const Selection& selection() const { return selection_; }
  const std::vector<uint32_t>& conflicting_variables() const { return conflicting_; }
  uint32_t positive_count(Variable v) const { return pos_[v.id]; }
  uint32_t negative_count(Variable v) const { return neg_[v.id]; }
  // Clauses of width >= 2 whose selected literal is on variable v.
  const std::vector<uint32_t>& movable_clauses(Variable v) const { return movable_[v.id]; }

  // Cost after replacing clause's selected literal by literal_index.
  uint64_t cost_if_reselected(uint32_t clause, uint32_t literal_index) const;
  void reselect(uint32_t clause, uint32_t literal_index);

 private:
  void add(uint32_t clause);
  void remove(uint32_t clause);
  void update_conflict(uint32_t var);

  const CnfFormula* formula_;
  Selection selection_;
  std::vector<uint32_t> pos_, neg_;
  std::vector<uint32_t> conflicting_;
  std::vector<int64_t> conflict_slot_;  // index in conflicting_, or -1
  std::vector<std::vector<uint32_t>> movable_;
  std::vector<uint32_t> movable_slot_;  // per clause, index in movable_[var]
};

// One restart of the selection-space search.
class LocalSearchRun {
 public:
  enum class Step { Solved, Flipped, Deadlocked };

  // Draws the initial selection from the seeded stream. The formula must have
  // no empty clause.
  LocalSearchRun(const CnfFormula& formula, uint64_t seed, double noise);

  Step step();
  const ConflictLedger& ledger() const { return ledger_; }

 private:
  static Selection random_selection(const CnfFormula& formula, Rng& rng);

  const CnfFormula* formula_;
  Rng rng_;
  double noise_;
  ConflictLedger ledger_;
};

// Local search over one-literal-per-clause selections. Returns Satisfiable
// or Unknown; Unsatisfiable only when the formula has an empty clause.
SolveResult local_search(const CnfFormula& formula, const SearchConfig& config);

}  // namespace tokensat
