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
#include <utility>

#include "tokensat/cnf.hpp"

namespace tokensat {

struct GenSpec {
  uint32_t num_variables = 0;
  uint64_t num_clauses = 0;
  uint32_t width = 3;
  uint64_t seed = 0;

  // Requires 1 <= width <= num_variables; throws std::invalid_argument.
  void validate() const;
};

// The seven-clause tutorial formula over r=1, b=2, p=3, y=4.
CnfFormula paper_example();

// Each clause: `width` distinct variables drawn uniformly, uniform polarity.
CnfFormula random_ksat(const GenSpec& spec);

struct PlantedInstance {
  CnfFormula formula;
  Interpretation hidden;
};

// Draws the hidden interpretation first, then rejects every sampled clause
// that it falsifies.
PlantedInstance planted_sat(const GenSpec& spec);

}  // namespace tokensat
