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

#include <algorithm>

#include "tokensat/reduction.hpp"

namespace tokensat {
namespace {

using Clock = std::chrono::steady_clock;

// Interpretation/decision odometer: variable 1 is the most significant digit.
template <typename Digits, typename Flip>
bool advance(uint32_t n, Digits is_high, Flip set) {
  for (uint32_t i = n; i >= 1; --i) {
    if (!is_high(i)) {
      set(i, true);
      return true;
    }
    set(i, false);
  }
  return false;
}

}  // namespace

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Satisfiable: return "SATISFIABLE";
    case Outcome::Unsatisfiable: return "UNSATISFIABLE";
    case Outcome::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

SolveResult SolveResult::satisfiable(const CnfFormula& formula, Interpretation model,
                                     SolveStats stats) {
  if (!evaluate(formula, model)) throw std::logic_error("solver produced a non-model");
  return SolveResult(Outcome::Satisfiable, std::move(model), stats);
}

void enumerate_interpretations(uint32_t num_variables,
                               const std::function<bool(const Interpretation&)>& visit) {
  if (num_variables > kBruteForceMaxVariables)
    throw GuardViolation("brute force limited to " + std::to_string(kBruteForceMaxVariables) +
                         " variables");
  Interpretation interp(num_variables, false);
  do {
    if (!visit(interp)) return;
  } while (advance(
      num_variables, [&](uint32_t v) { return interp.value(Variable{v}); },
      [&](uint32_t v, bool b) { interp.set(Variable{v}, b); }));
}

SolveResult brute_force_sat(const CnfFormula& formula) {
  auto start = Clock::now();
  std::optional<Interpretation> found;
  enumerate_interpretations(formula.num_variables(), [&](const Interpretation& interp) {
    if (!evaluate(formula, interp)) return true;
    found = interp;
    return false;
  });
  SolveStats stats;
  stats.wall_time = Clock::now() - start;
  if (found) return SolveResult::satisfiable(formula, std::move(*found), stats);
  return SolveResult::unsatisfiable(stats);
}

// "Low" digit is remove-Square (variable false), "high" is remove-Round.
void enumerate_decisions(uint32_t num_colors,
                         const std::function<bool(const ShapeDecision&)>& visit) {
  if (num_colors > kBruteForceMaxVariables)
    throw GuardViolation("brute force limited to " + std::to_string(kBruteForceMaxVariables) +
                         " colors");
  ShapeDecision decision(num_colors, Shape::Square);
  do {
    if (!visit(decision)) return;
  } while (advance(
      num_colors, [&](uint32_t c) { return decision.removed(Color{c}) == Shape::Round; },
      [&](uint32_t c, bool high) {
        decision.set_removed(Color{c}, high ? Shape::Round : Shape::Square);
      }));
}

std::optional<ShapeDecision> brute_force_game_original(const GameInstance& instance) {
  std::optional<ShapeDecision> found;
  if (instance.has_empty_box()) {
    // Still respect the guard so oversized inputs fail the same way.
    if (instance.num_colors() > kBruteForceMaxVariables)
      throw GuardViolation("brute force limited to " + std::to_string(kBruteForceMaxVariables) +
                           " colors");
    return found;
  }
  enumerate_decisions(instance.num_colors(), [&](const ShapeDecision& decision) {
    for (const Box& box : instance.boxes()) {
      bool survives = std::any_of(box.begin(), box.end(), [&](const Token& t) {
        return t.shape != decision.removed(t.color);
      });
      if (!survives) return true;
    }
    found = decision;
    return false;
  });
  return found;
}

namespace {

void check_keep_guard(const GameInstance& instance) {
  uint64_t product = 1;
  for (const Box& box : instance.boxes()) {
    if (box.empty()) return;
    if (product > kVariantMaxKeepSets / box.size())
      throw GuardViolation("variant brute force limited to " +
                           std::to_string(kVariantMaxKeepSets) + " keep sets");
    product *= box.size();
  }
  if (product > kVariantMaxKeepSets)
    throw GuardViolation("variant brute force limited to " + std::to_string(kVariantMaxKeepSets) +
                         " keep sets");
}

bool keep_set_consistent(const GameInstance& instance, const std::vector<size_t>& keep,
                         std::vector<uint8_t>& seen) {
  std::fill(seen.begin(), seen.end(), 0);
  for (size_t i = 0; i < keep.size(); ++i) {
    const Token& t = instance.boxes()[i][keep[i]];
    seen[t.color.id] |= t.shape == Shape::Square ? 1 : 2;
    if (seen[t.color.id] == 3) return false;
  }
  return true;
}

// Visits every keep set (one token index per box); stops when visit
// returns false.
template <typename Visit>
void for_each_keep_set(const GameInstance& instance, Visit visit) {
  check_keep_guard(instance);
  if (instance.has_empty_box()) return;
  std::vector<size_t> keep(instance.num_boxes(), 0);
  while (true) {
    if (!visit(keep)) return;
    size_t i = keep.size();
    while (i > 0) {
      --i;
      if (++keep[i] < instance.boxes()[i].size()) break;
      keep[i] = 0;
      if (i == 0) return;
    }
    if (keep.empty()) return;
  }
}

}  // namespace

std::optional<VariantState> brute_force_game_variant(const GameInstance& instance) {
  std::vector<uint8_t> seen(instance.num_colors() + 1);
  std::optional<std::vector<size_t>> found;
  for_each_keep_set(instance, [&](const std::vector<size_t>& keep) {
    if (!keep_set_consistent(instance, keep, seen)) return true;
    found = keep;
    return false;
  });
  if (!found) return std::nullopt;

  VariantState state(instance);
  for (size_t i = 0; i < found->size(); ++i) {
    const Box& box = instance.boxes()[i];
    // Drop everything except the kept occurrence. Identical tokens are
    // interchangeable, so removal of "one matching token" is enough.
    for (size_t j = 0; j < box.size(); ++j)
      if (j != (*found)[i]) state.apply(VariantMove{i, box[j]});
  }
  return state;
}

KeepSetCensus variant_keep_set_census(const GameInstance& instance) {
  std::vector<uint8_t> seen(instance.num_colors() + 1);
  KeepSetCensus census;
  for_each_keep_set(instance, [&](const std::vector<size_t>& keep) {
    ++census.scanned;
    if (keep_set_consistent(instance, keep, seen)) ++census.consistent;
    return true;
  });
  return census;
}

// ---------------------------------------------------------------------------
// DPLL with two watched literals and chronological backtracking.

namespace {

class Dpll {
 public:
  explicit Dpll(const CnfFormula& formula)
      : n_(formula.num_variables()), value_(n_ + 1, 0), watches_(2 * (n_ + 1)) {
    for (const Clause& clause : formula.clauses()) {
      std::vector<uint32_t> lits;
      bool tautology = false;
      for (Literal lit : clause) {
        uint32_t code = encode(lit);
        if (std::find(lits.begin(), lits.end(), code ^ 1u) != lits.end()) tautology = true;
        if (std::find(lits.begin(), lits.end(), code) == lits.end()) lits.push_back(code);
      }
      if (tautology) continue;
      if (lits.empty()) {
        trivially_unsat_ = true;
        continue;
      }
      if (lits.size() == 1) {
        units_.push_back(lits[0]);
        continue;
      }
      uint32_t index = static_cast<uint32_t>(clauses_.size());
      watches_[lits[0]].push_back(index);
      watches_[lits[1]].push_back(index);
      clauses_.push_back(std::move(lits));
    }
  }

  std::optional<Interpretation> solve() {
    if (trivially_unsat_) return std::nullopt;
    for (uint32_t u : units_) {
      if (lit_value(u) < 0) return std::nullopt;
      if (lit_value(u) == 0) assign(u);
    }
    struct Decision {
      size_t trail_mark;
      uint32_t var;
      bool flipped;
    };
    std::vector<Decision> decisions;
    if (!propagate()) return std::nullopt;
    uint32_t next_var = 1;
    while (true) {
      while (next_var <= n_ && value_[next_var] != 0) ++next_var;
      if (next_var > n_) break;
      decisions.push_back({trail_.size(), next_var, false});
      assign(2 * next_var);
      while (!propagate()) {
        while (!decisions.empty() && decisions.back().flipped) decisions.pop_back();
        if (decisions.empty()) return std::nullopt;
        Decision& d = decisions.back();
        undo_to(d.trail_mark);
        d.flipped = true;
        next_var = std::min(next_var, d.var);
        assign(2 * d.var + 1);
      }
    }
    Interpretation model(n_);
    for (uint32_t v = 1; v <= n_; ++v) model.set(Variable{v}, value_[v] > 0);
    return model;
  }

 private:
  // Literal code: 2v for v, 2v+1 for -v.
  static uint32_t encode(Literal lit) { return 2 * lit.variable().id + (lit.positive() ? 0 : 1); }

  int8_t lit_value(uint32_t code) const {
    int8_t v = value_[code >> 1];
    return (code & 1u) ? static_cast<int8_t>(-v) : v;
  }

  void assign(uint32_t code) {
    value_[code >> 1] = (code & 1u) ? -1 : 1;
    trail_.push_back(code);
  }

  void undo_to(size_t mark) {
    while (trail_.size() > mark) {
      value_[trail_.back() >> 1] = 0;
      trail_.pop_back();
    }
    head_ = std::min(head_, mark);
  }

  bool propagate() {
    while (head_ < trail_.size()) {
      uint32_t false_lit = trail_[head_++] ^ 1u;
      auto& watching = watches_[false_lit];
      size_t keep = 0;
      for (size_t w = 0; w < watching.size(); ++w) {
        uint32_t ci = watching[w];
        auto& lits = clauses_[ci];
        if (lits[0] == false_lit) std::swap(lits[0], lits[1]);
        if (lit_value(lits[0]) > 0) {
          watching[keep++] = ci;
          continue;
        }
        bool moved = false;
        for (size_t k = 2; k < lits.size(); ++k) {
          if (lit_value(lits[k]) >= 0) {
            std::swap(lits[1], lits[k]);
            watches_[lits[1]].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        watching[keep++] = ci;
        if (lit_value(lits[0]) == 0) {
          assign(lits[0]);
        } else {
          for (++w; w < watching.size(); ++w) watching[keep++] = watching[w];
          watching.resize(keep);
          return false;
        }
      }
      watching.resize(keep);
    }
    return true;
  }

  uint32_t n_;
  std::vector<int8_t> value_;  // +1 true, -1 false, 0 unassigned
  std::vector<std::vector<uint32_t>> watches_;
  std::vector<std::vector<uint32_t>> clauses_;
  std::vector<uint32_t> units_;
  std::vector<uint32_t> trail_;
  size_t head_ = 0;
  bool trivially_unsat_ = false;
};

}  // namespace

SolveResult dpll(const CnfFormula& formula) {
  auto start = Clock::now();
  auto model = Dpll(formula).solve();
  SolveStats stats;
  stats.wall_time = Clock::now() - start;
  if (model) return SolveResult::satisfiable(formula, std::move(*model), stats);
  return SolveResult::unsatisfiable(stats);
}

std::optional<std::pair<Color, Shape>> hint_original(const GameInstance& instance,
                                                     const PartialDecision& partial) {
  if (partial.size() != instance.num_colors())
    throw ContractViolation("partial decision must have one slot per color");

  std::vector<Box> boxes = instance.boxes();
  for (uint32_t c = 1; c <= instance.num_colors(); ++c)
    if (partial[c - 1]) remove_all(boxes, Color{c}, *partial[c - 1]);

  // Boxes holding a token of a decided color are won for good; the rest
  // form the residual formula over the undecided colors.
  CnfFormula residual(instance.num_colors());
  for (const Box& box : boxes) {
    if (box.empty()) return std::nullopt;
    bool settled = std::any_of(box.begin(), box.end(),
                               [&](const Token& t) { return partial[t.color.id - 1].has_value(); });
    if (settled) continue;
    Clause clause;
    for (const Token& t : box) clause.push_back(token_to_literal(t));
    residual.add_clause(std::move(clause));
  }

  auto undecided = std::find(partial.begin(), partial.end(), std::nullopt);
  if (undecided == partial.end()) return std::nullopt;
  SolveResult result = dpll(residual);
  if (!result.is_sat()) return std::nullopt;
  Color color{static_cast<uint32_t>(undecided - partial.begin()) + 1};
  bool value = result.model()->value(Variable{color.id});
  return std::make_pair(color, value ? Shape::Round : Shape::Square);
}

}  // namespace tokensat
