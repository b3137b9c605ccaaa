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

#include "tokensat/generators.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "tokensat/random.hpp"

namespace tokensat {
namespace {

// Partial Fisher-Yates over a reusable pool: the first `width` entries
// become a uniform sample of distinct variables, in draw order.
Clause draw_clause(Rng& rng, std::vector<uint32_t>& pool, uint32_t width) {
  Clause clause;
  clause.reserve(width);
  for (uint32_t i = 0; i < width; ++i) {
    auto j = i + static_cast<uint32_t>(rng.below(pool.size() - i));
    std::swap(pool[i], pool[j]);
    clause.emplace_back(Variable{pool[i]}, rng.coin());
  }
  return clause;
}

std::vector<uint32_t> variable_pool(uint32_t n) {
  std::vector<uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 1u);
  return pool;
}

}  // namespace

void GenSpec::validate() const {
  if (width < 1) throw std::invalid_argument("clause width must be at least 1");
  if (width > num_variables)
    throw std::invalid_argument("clause width " + std::to_string(width) + " exceeds " +
                                std::to_string(num_variables) + " variables");
}

CnfFormula paper_example() {
  constexpr Variable r{1}, b{2}, p{3}, y{4};
  auto pos = [](Variable v) { return Literal(v, true); };
  auto neg = [](Variable v) { return Literal(v, false); };
  return CnfFormula(4, {
                           {pos(r), pos(b), neg(p)},
                           {neg(r), pos(b), neg(p)},
                           {pos(r), neg(b), neg(p)},
                           {neg(r), neg(b), neg(p)},
                           {pos(p), pos(y)},
                           {pos(r), neg(y)},
                           {pos(b), neg(y)},
                       });
}

CnfFormula random_ksat(const GenSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  auto pool = variable_pool(spec.num_variables);
  CnfFormula formula(spec.num_variables);
  for (uint64_t i = 0; i < spec.num_clauses; ++i)
    formula.add_clause(draw_clause(rng, pool, spec.width));
  return formula;
}

PlantedInstance planted_sat(const GenSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  Interpretation hidden(spec.num_variables);
  for (uint32_t v = 1; v <= spec.num_variables; ++v) hidden.set(Variable{v}, rng.coin());
  auto pool = variable_pool(spec.num_variables);
  CnfFormula formula(spec.num_variables);
  while (formula.num_clauses() < spec.num_clauses) {
    Clause c = draw_clause(rng, pool, spec.width);
    if (clause_satisfied(c, hidden)) formula.add_clause(std::move(c));
  }
  return PlantedInstance{std::move(formula), std::move(hidden)};
}

}  // namespace tokensat
