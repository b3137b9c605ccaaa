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

#include "tokensat/cnf.hpp"

#include <algorithm>

namespace tokensat {

CnfFormula::CnfFormula(uint32_t num_variables, std::vector<Clause> clauses)
    : num_variables_(num_variables) {
  clauses_.reserve(clauses.size());
  for (auto& c : clauses) add_clause(std::move(c));
}

size_t CnfFormula::num_literals() const {
  size_t total = 0;
  for (const auto& c : clauses_) total += c.size();
  return total;
}

void CnfFormula::add_clause(Clause clause) {
  for (const Literal& lit : clause) {
    if (lit.variable().id == 0 || lit.variable().id > num_variables_)
      throw ContractViolation("literal " + to_string(lit) + " exceeds " +
                              std::to_string(num_variables_) + " declared variables");
  }
  clauses_.push_back(std::move(clause));
}

bool clause_satisfied(const Clause& clause, const Interpretation& interp) {
  return std::any_of(clause.begin(), clause.end(),
                     [&](Literal lit) { return interp.satisfies(lit); });
}

bool evaluate(const CnfFormula& formula, const Interpretation& interp) {
  if (interp.num_variables() < formula.num_variables())
    throw ContractViolation("interpretation covers " + std::to_string(interp.num_variables()) +
                            " of " + std::to_string(formula.num_variables()) + " variables");
  return std::all_of(formula.clauses().begin(), formula.clauses().end(),
                     [&](const Clause& c) { return clause_satisfied(c, interp); });
}

std::string to_string(Literal lit) { return std::to_string(lit.to_dimacs()); }

}  // namespace tokensat
