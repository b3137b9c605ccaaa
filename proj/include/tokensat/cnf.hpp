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
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace tokensat {

// Raised when a caller breaks a documented precondition (non-total
// interpretation, out-of-range index, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Variable {
  uint32_t id = 1;  // 1-based

  friend bool operator==(Variable, Variable) = default;
  friend auto operator<=>(Variable, Variable) = default;
};

class Literal {
 public:
  constexpr Literal(Variable var, bool positive) : var_(var), positive_(positive) {}

  // Signed DIMACS integer; zero is not a literal.
  static Literal from_dimacs(int64_t value) {
    if (value == 0) throw ContractViolation("0 is not a literal");
    return Literal(Variable{static_cast<uint32_t>(value < 0 ? -value : value)}, value > 0);
  }

  constexpr Variable variable() const { return var_; }
  constexpr bool positive() const { return positive_; }
  constexpr Literal negated() const { return Literal(var_, !positive_); }
  constexpr Literal operator~() const { return negated(); }
  int64_t to_dimacs() const {
    return positive_ ? static_cast<int64_t>(var_.id) : -static_cast<int64_t>(var_.id);
  }

  friend bool operator==(Literal, Literal) = default;

 private:
  Variable var_;
  bool positive_;
};

// Duplicates and complementary pairs are kept as written.
using Clause = std::vector<Literal>;

// A truth value for each of the variables 1..num_variables.
class Interpretation {
 public:
  Interpretation() = default;
  explicit Interpretation(uint32_t num_variables, bool initial = false)
      : values_(num_variables, initial) {}
  explicit Interpretation(std::vector<bool> values) : values_(std::move(values)) {}

  uint32_t num_variables() const { return static_cast<uint32_t>(values_.size()); }

  bool value(Variable v) const {
    check(v);
    return values_[v.id - 1];
  }
  void set(Variable v, bool value) {
    check(v);
    values_[v.id - 1] = value;
  }
  bool satisfies(Literal lit) const { return value(lit.variable()) == lit.positive(); }

  friend bool operator==(const Interpretation&, const Interpretation&) = default;

 private:
  void check(Variable v) const {
    if (v.id == 0 || v.id > values_.size())
      throw ContractViolation("variable " + std::to_string(v.id) +
                              " outside interpretation of size " +
                              std::to_string(values_.size()));
  }

  std::vector<bool> values_;
};

class CnfFormula {
 public:
  CnfFormula() = default;
  explicit CnfFormula(uint32_t num_variables) : num_variables_(num_variables) {}
  CnfFormula(uint32_t num_variables, std::vector<Clause> clauses);

  uint32_t num_variables() const { return num_variables_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  size_t num_clauses() const { return clauses_.size(); }
  size_t num_literals() const;

  // Throws ContractViolation if a literal names a variable > num_variables.
  void add_clause(Clause clause);

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

 private:
  uint32_t num_variables_ = 0;
  std::vector<Clause> clauses_;
};

bool clause_satisfied(const Clause& clause, const Interpretation& interp);

// True iff every clause has a satisfied literal. The interpretation must
// cover at least formula.num_variables() variables.
bool evaluate(const CnfFormula& formula, const Interpretation& interp);

std::string to_string(Literal lit);

}  // namespace tokensat
