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
#include <optional>
#include <string>
#include <vector>

#include "tokensat/game.hpp"

namespace tokensat {

// Cross-checks the two rule sets: an instance is feasible under the
// original rules iff it is feasible under the variant rules, and each
// solution transforms into a verified solution of the other game.
struct EquivalenceOptions {
  // Exhaustive tier.
  uint32_t max_colors = 3;
  uint32_t max_boxes = 3;
  uint32_t max_tokens_per_box = 2;
  // Random tier.
  uint64_t samples = 500;
  uint32_t random_max_colors = 8;
  uint32_t random_max_boxes = 8;
  uint32_t random_max_tokens_per_box = 4;
  uint64_t seed = 1;
};

struct EquivalenceReport {
  uint64_t exhaustive_instances = 0;
  uint64_t random_instances = 0;
  uint64_t feasible = 0;
  uint64_t infeasible = 0;
  uint64_t discrepancies = 0;
  std::optional<GameInstance> counterexample;  // first discrepancy
  std::string failure;                         // what went wrong on it
  std::chrono::nanoseconds original_oracle_time{0};
  std::chrono::nanoseconds variant_oracle_time{0};
  std::chrono::nanoseconds transform_time{0};
};

// Checks one instance, accumulating into report. Returns false on a
// discrepancy.
bool check_instance(const GameInstance& instance, EquivalenceReport& report);

EquivalenceReport check_equivalence(const EquivalenceOptions& options);

namespace detail {

// All multisets of at most max_tokens tokens over 2 * num_colors token
// kinds, as non-decreasing kind sequences.
std::vector<Box> small_boxes(uint32_t num_colors, uint32_t max_tokens);

}  // namespace detail

// Calls visit for every instance of the exhaustive tier: each color count
// up to max_colors, each box count up to max_boxes, each box a multiset of
// at most max_tokens tokens.
template <typename Visit>
void for_each_small_instance(uint32_t max_colors, uint32_t max_boxes, uint32_t max_tokens,
                             Visit visit) {
  for (uint32_t colors = 0; colors <= max_colors; ++colors) {
    const std::vector<Box> boxes = detail::small_boxes(colors, max_tokens);
    for (uint32_t count = 0; count <= max_boxes; ++count) {
      std::vector<size_t> pick(count, 0);
      while (true) {
        std::vector<Box> chosen;
        chosen.reserve(count);
        for (size_t p : pick) chosen.push_back(boxes[p]);
        visit(GameInstance(colors, std::move(chosen)));
        size_t i = count;
        while (i > 0 && ++pick[i - 1] == boxes.size()) pick[--i] = 0;
        if (i == 0) break;
      }
    }
  }
}

}  // namespace tokensat
