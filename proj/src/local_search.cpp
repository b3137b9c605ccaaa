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

#include "tokensat/local_search.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace tokensat {
namespace {

using Clock = std::chrono::steady_clock;

void check_selection(const CnfFormula& formula, const Selection& selection) {
  if (selection.chosen.size() != formula.num_clauses())
    throw ContractViolation("selection has " + std::to_string(selection.chosen.size()) +
                            " entries for " + std::to_string(formula.num_clauses()) + " clauses");
  for (size_t i = 0; i < selection.chosen.size(); ++i)
    if (selection.chosen[i] >= formula.clauses()[i].size())
      throw ContractViolation("selection index out of bounds in clause " + std::to_string(i));
}

bool in_conflict(uint32_t pos, uint32_t neg) { return pos > 0 && neg > 0; }

}  // namespace

void SearchConfig::validate() const {
  if (!(noise >= 0.0 && noise <= 1.0)) throw std::invalid_argument("noise must lie in [0, 1]");
  if (max_flips == 0) throw std::invalid_argument("max_flips must be positive");
  if (max_restarts == 0) throw std::invalid_argument("max_restarts must be positive");
}

uint64_t selection_cost(const CnfFormula& formula, const Selection& selection) {
  check_selection(formula, selection);
  std::vector<uint8_t> seen(formula.num_variables() + 1, 0);
  uint64_t cost = 0;
  for (size_t i = 0; i < selection.chosen.size(); ++i) {
    Literal lit = formula.clauses()[i][selection.chosen[i]];
    uint8_t& s = seen[lit.variable().id];
    uint8_t before = s;
    s |= lit.positive() ? 1 : 2;
    if (before != 3 && s == 3) ++cost;
  }
  return cost;
}

Interpretation extract_interpretation(const CnfFormula& formula, const Selection& selection) {
  if (selection_cost(formula, selection) != 0)
    throw ContractViolation("selection has conflicting variables");
  Interpretation interp(formula.num_variables(), true);
  for (size_t i = 0; i < selection.chosen.size(); ++i) {
    Literal lit = formula.clauses()[i][selection.chosen[i]];
    interp.set(lit.variable(), lit.positive());
  }
  return interp;
}

// ---------------------------------------------------------------------------

ConflictLedger::ConflictLedger(const CnfFormula& formula, Selection selection)
    : formula_(&formula),
      selection_(std::move(selection)),
      pos_(formula.num_variables() + 1, 0),
      neg_(formula.num_variables() + 1, 0),
      conflict_slot_(formula.num_variables() + 1, -1),
      movable_(formula.num_variables() + 1),
      movable_slot_(formula.num_clauses(), 0) {
  check_selection(formula, selection_);
  for (uint32_t c = 0; c < formula.num_clauses(); ++c) add(c);
}

void ConflictLedger::update_conflict(uint32_t var) {
  bool now = in_conflict(pos_[var], neg_[var]);
  bool listed = conflict_slot_[var] >= 0;
  if (now == listed) return;
  if (now) {
    conflict_slot_[var] = static_cast<int64_t>(conflicting_.size());
    conflicting_.push_back(var);
  } else {
    auto slot = static_cast<size_t>(conflict_slot_[var]);
    uint32_t last = conflicting_.back();
    conflicting_[slot] = last;
    conflict_slot_[last] = static_cast<int64_t>(slot);
    conflicting_.pop_back();
    conflict_slot_[var] = -1;
  }
}

void ConflictLedger::add(uint32_t clause) {
  const Clause& lits = formula_->clauses()[clause];
  Literal lit = lits[selection_.chosen[clause]];
  uint32_t var = lit.variable().id;
  ++(lit.positive() ? pos_ : neg_)[var];
  if (lits.size() >= 2) {
    movable_slot_[clause] = static_cast<uint32_t>(movable_[var].size());
    movable_[var].push_back(clause);
  }
  update_conflict(var);
}

void ConflictLedger::remove(uint32_t clause) {
  const Clause& lits = formula_->clauses()[clause];
  Literal lit = lits[selection_.chosen[clause]];
  uint32_t var = lit.variable().id;
  --(lit.positive() ? pos_ : neg_)[var];
  if (lits.size() >= 2) {
    auto& list = movable_[var];
    uint32_t slot = movable_slot_[clause];
    uint32_t last = list.back();
    list[slot] = last;
    movable_slot_[last] = slot;
    list.pop_back();
  }
  update_conflict(var);
}

uint64_t ConflictLedger::cost_if_reselected(uint32_t clause, uint32_t literal_index) const {
  const Clause& lits = formula_->clauses()[clause];
  Literal old_lit = lits[selection_.chosen[clause]];
  Literal new_lit = lits.at(literal_index);
  uint32_t a = old_lit.variable().id;
  uint32_t b = new_lit.variable().id;

  uint32_t pa = pos_[a], na = neg_[a];
  int64_t before = in_conflict(pa, na);
  (old_lit.positive() ? pa : na) -= 1;
  if (a == b) {
    (new_lit.positive() ? pa : na) += 1;
    return cost() - before + in_conflict(pa, na);
  }
  uint32_t pb = pos_[b], nb = neg_[b];
  before += in_conflict(pb, nb);
  (new_lit.positive() ? pb : nb) += 1;
  return cost() - before + in_conflict(pa, na) + in_conflict(pb, nb);
}

void ConflictLedger::reselect(uint32_t clause, uint32_t literal_index) {
  if (literal_index >= formula_->clauses().at(clause).size())
    throw ContractViolation("literal index out of bounds");
  remove(clause);
  selection_.chosen[clause] = literal_index;
  add(clause);
}

// ---------------------------------------------------------------------------

Selection LocalSearchRun::random_selection(const CnfFormula& formula, Rng& rng) {
  Selection s;
  s.chosen.reserve(formula.num_clauses());
  for (const Clause& c : formula.clauses()) {
    if (c.empty()) throw ContractViolation("local search requires non-empty clauses");
    s.chosen.push_back(static_cast<uint32_t>(rng.below(c.size())));
  }
  return s;
}

LocalSearchRun::LocalSearchRun(const CnfFormula& formula, uint64_t seed, double noise)
    : formula_(&formula), rng_(seed), noise_(noise), ledger_(formula, random_selection(formula, rng_)) {}

LocalSearchRun::Step LocalSearchRun::step() {
  if (ledger_.cost() == 0) return Step::Solved;

  const auto& conflicts = ledger_.conflicting_variables();
  uint32_t var = conflicts[rng_.below(conflicts.size())];
  if (ledger_.movable_clauses(Variable{var}).empty()) {
    // Only unit clauses select this variable; fall back to a uniformly
    // chosen conflicting variable that has a clause with an alternative.
    std::vector<uint32_t> candidates;
    for (uint32_t v : conflicts)
      if (!ledger_.movable_clauses(Variable{v}).empty()) candidates.push_back(v);
    if (candidates.empty()) return Step::Deadlocked;
    var = candidates[rng_.below(candidates.size())];
  }

  const auto& movable = ledger_.movable_clauses(Variable{var});
  uint32_t clause = movable[rng_.below(movable.size())];
  auto width = static_cast<uint32_t>(formula_->clauses()[clause].size());
  uint32_t current = ledger_.selection().chosen[clause];

  uint32_t choice = 0;
  if (rng_.unit() < noise_) {
    choice = static_cast<uint32_t>(rng_.below(width - 1));
    if (choice >= current) ++choice;
  } else {
    uint64_t best = UINT64_MAX;
    uint64_t ties = 0;
    for (uint32_t j = 0; j < width; ++j) {
      if (j == current) continue;
      uint64_t c = ledger_.cost_if_reselected(clause, j);
      if (c < best) {
        best = c;
        choice = j;
        ties = 1;
      } else if (c == best && rng_.below(++ties) == 0) {
        choice = j;
      }
    }
  }
  ledger_.reselect(clause, choice);
  return ledger_.cost() == 0 ? Step::Solved : Step::Flipped;
}

namespace {

struct RestartOutcome {
  uint64_t flips = 0;
  bool solved = false;
  Selection selection;
};

// Runs one restart; gives up early once `abandon` says a lower-indexed
// restart already succeeded.
template <typename Abandon>
RestartOutcome run_restart(const CnfFormula& formula, const SearchConfig& config, uint64_t index,
                           Abandon abandon) {
  LocalSearchRun run(formula, config.seed + index, config.noise);
  RestartOutcome out;
  while (run.ledger().cost() > 0 && out.flips < config.max_flips) {
    if ((out.flips & 1023) == 0 && abandon()) break;
    if (run.step() == LocalSearchRun::Step::Deadlocked) {
      // No clause can change; the rest of the budget is spent.
      out.flips = config.max_flips;
      break;
    }
    ++out.flips;
  }
  out.solved = run.ledger().cost() == 0;
  if (out.solved) out.selection = run.ledger().selection();
  return out;
}

}  // namespace

SolveResult local_search(const CnfFormula& formula, const SearchConfig& config) {
  config.validate();
  auto start = Clock::now();
  SolveStats stats;
  for (const Clause& c : formula.clauses()) {
    if (c.empty()) {
      stats.wall_time = Clock::now() - start;
      return SolveResult::unsatisfiable(stats);
    }
  }

  std::vector<RestartOutcome> outcomes(config.max_restarts);
  if (config.threads <= 1) {
    for (uint64_t r = 0; r < config.max_restarts; ++r) {
      outcomes[r] = run_restart(formula, config, r, [] { return false; });
      if (outcomes[r].solved) break;
    }
  } else {
    std::atomic<uint64_t> next{0};
    std::atomic<uint64_t> best{UINT64_MAX};
    auto worker = [&] {
      while (true) {
        uint64_t r = next.fetch_add(1);
        if (r >= config.max_restarts || r > best.load()) return;
        outcomes[r] = run_restart(formula, config, r, [&] { return best.load() < r; });
        if (outcomes[r].solved) {
          uint64_t seen = best.load();
          while (r < seen && !best.compare_exchange_weak(seen, r)) {
          }
        }
      }
    };
    std::vector<std::thread> pool;
    unsigned n = std::min<uint64_t>(config.threads, config.max_restarts);
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (uint64_t r = 0; r < config.max_restarts; ++r) {
    stats.flips += outcomes[r].flips;
    stats.restarts = r + 1;
    if (outcomes[r].solved) {
      Interpretation model = extract_interpretation(formula, outcomes[r].selection);
      stats.wall_time = Clock::now() - start;
      return SolveResult::satisfiable(formula, std::move(model), stats);
    }
  }
  stats.wall_time = Clock::now() - start;
  return SolveResult::unknown(stats);
}

}  // namespace tokensat
