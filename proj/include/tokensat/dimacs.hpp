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

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tokensat/cnf.hpp"

namespace tokensat {

class DimacsError : public std::runtime_error {
 public:
  DimacsError(size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  size_t line() const { return line_; }

 private:
  size_t line_;
};

// Reads DIMACS CNF. Comment lines start with 'c'; exactly one
// "p cnf <vars> <clauses>" header must precede the first clause. Literals
// may be spread over lines arbitrarily, each clause ends with 0. Throws
// DimacsError carrying the offending line number.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(std::string_view text);

// Canonical form: header line, then one clause per line ending in " 0".
std::string serialize_dimacs(const CnfFormula& formula);

CnfFormula read_dimacs_file(const std::string& path);

}  // namespace tokensat
