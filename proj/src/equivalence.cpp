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

#include "tokensat/equivalence.hpp"

#include "tokensat/game_json.hpp"
#include "tokensat/random.hpp"
#include "tokensat/reduction.hpp"
#include "tokensat/solvers.hpp"

namespace tokensat {
namespace detail {

std::vector<Box> small_boxes(uint32_t num_colors, uint32_t max_tokens) {
  const uint32_t kinds = 2 * num_colors;
  auto token_of = [](uint32_t kind) {
    return Token{Color{kind / 2 + 1}, kind % 2 == 0 ? Shape::Square : Shape::Round};
  };
  std::vector<Box> out{Box{}};
  // Extend each multiset by kinds >= its last kind.
  std::vector<std::pair<Box, uint32_t>> frontier{{Box{}, 0}};
  for (uint32_t size = 1; size <= max_tokens && kinds > 0; ++size) {
    std::vector<std::pair<Box, uint32_t>> next;
    for (const auto& [box, min_kind] : frontier) {
      for (uint32_t k = min_kind; k < kinds; ++k) {
        Box grown = box;
        grown.push_back(token_of(k));
        out.push_back(grown);
        next.emplace_back(std::move(grown), k);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace detail

namespace {

using Clock = std::chrono::steady_clock;

GameInstance random_instance(Rng& rng, const EquivalenceOptions& o) {
  auto colors = static_cast<uint32_t>(1 + rng.below(o.random_max_colors));
  auto boxes = static_cast<uint32_t>(1 + rng.below(o.random_max_boxes));
  GameInstance instance(colors);
  for (uint32_t b = 0; b < boxes; ++b) {
    // Occasionally an empty box, which must be infeasible under both rules.
    size_t width = rng.below(20) == 0 ? 0 : 1 + rng.below(o.random_max_tokens_per_box);
    Box box;
    for (size_t t = 0; t < width; ++t)
      box.push_back(Token{Color{static_cast<uint32_t>(1 + rng.below(colors))},
                          rng.coin() ? Shape::Square : Shape::Round});
    instance.add_box(std::move(box));
  }
  return instance;
}

bool fail(EquivalenceReport& report, const GameInstance& instance, std::string why) {
  ++report.discrepancies;
  if (!report.counterexample) {
    report.counterexample = instance;
    report.failure = std::move(why);
  }
  return false;
}

}  // namespace

bool check_instance(const GameInstance& instance, EquivalenceReport& report) {
  auto t0 = Clock::now();
  auto original = brute_force_game_original(instance);
  auto t1 = Clock::now();
  auto variant = brute_force_game_variant(instance);
  auto t2 = Clock::now();
  report.original_oracle_time += t1 - t0;
  report.variant_oracle_time += t2 - t1;

  if (original.has_value() != variant.has_value())
    return fail(report, instance,
                original ? "original feasible, variant infeasible"
                         : "variant feasible, original infeasible");
  if (!original) {
    ++report.infeasible;
    return true;
  }
  ++report.feasible;

  bool ok = true;
  auto t3 = Clock::now();
  {
    VariantPlay play = original_solution_to_variant_play(instance, *original);
    // Re-check independently of the transform's own report.
    auto replayed = replay_variant(std::make_shared<const GameInstance>(instance), play.moves);
    if (!play.report.verified || !variant_is_won(replayed))
      ok = fail(report, instance, "winning decision did not yield a won variant play");
  }
  if (ok) {
    DecisionMapping mapping = variant_final_to_decision(instance, *variant);
    if (!mapping.report.verified || !apply_decision(instance, mapping.decision).won)
      ok = fail(report, instance, "won variant state did not yield a winning decision");
  }
  report.transform_time += Clock::now() - t3;
  return ok;
}

EquivalenceReport check_equivalence(const EquivalenceOptions& options) {
  EquivalenceReport report;
  for_each_small_instance(options.max_colors, options.max_boxes, options.max_tokens_per_box,
                          [&](const GameInstance& g) {
                            ++report.exhaustive_instances;
                            check_instance(g, report);
                          });
  Rng rng(options.seed);
  for (uint64_t i = 0; i < options.samples; ++i) {
    ++report.random_instances;
    check_instance(random_instance(rng, options), report);
  }
  return report;
}

}  // namespace tokensat
