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

#include "tokensat/dimacs.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

namespace tokensat {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::optional<int64_t> to_int(std::string_view token) {
  int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
  return value;
}

struct Header {
  uint32_t num_variables;
  size_t num_clauses;
  size_t line;
};

Header parse_header(const std::vector<std::string_view>& tokens, size_t line_no) {
  if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != "cnf")
    throw DimacsError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
  auto vars = to_int(tokens[2]);
  auto clauses = to_int(tokens[3]);
  if (!vars || !clauses || *vars < 0 || *clauses < 0 ||
      *vars > std::numeric_limits<int32_t>::max())
    throw DimacsError(line_no, "malformed header counts");
  return Header{static_cast<uint32_t>(*vars), static_cast<size_t>(*clauses), line_no};
}

}  // namespace

CnfFormula parse_dimacs(std::istream& in) {
  std::optional<Header> header;
  std::optional<CnfFormula> formula;
  Clause pending;
  size_t pending_line = 0;
  std::string line;
  size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens[0].front() == 'c') continue;
    if (tokens[0] == "p") {
      if (header) throw DimacsError(line_no, "duplicate header");
      header = parse_header(tokens, line_no);
      formula.emplace(header->num_variables);
      continue;
    }
    if (!header) throw DimacsError(line_no, "clause data before 'p cnf' header");
    for (std::string_view tok : tokens) {
      auto value = to_int(tok);
      if (!value) throw DimacsError(line_no, "non-integer token '" + std::string(tok) + "'");
      if (*value == 0) {
        if (formula->num_clauses() == header->num_clauses)
          throw DimacsError(line_no, "more clauses than the " +
                                         std::to_string(header->num_clauses) + " declared");
        formula->add_clause(std::move(pending));
        pending.clear();
        continue;
      }
      int64_t magnitude = *value < 0 ? -*value : *value;
      if (magnitude > static_cast<int64_t>(header->num_variables))
        throw DimacsError(line_no, "literal " + std::string(tok) + " exceeds " +
                                       std::to_string(header->num_variables) +
                                       " declared variables");
      if (pending.empty()) pending_line = line_no;
      pending.push_back(Literal::from_dimacs(*value));
    }
  }

  if (!header) throw DimacsError(line_no == 0 ? 1 : line_no, "missing 'p cnf' header");
  if (!pending.empty()) throw DimacsError(pending_line, "clause not terminated by 0");
  if (formula->num_clauses() != header->num_clauses)
    throw DimacsError(header->line, "header declares " + std::to_string(header->num_clauses) +
                                        " clauses, found " +
                                        std::to_string(formula->num_clauses()));
  return std::move(*formula);
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

std::string serialize_dimacs(const CnfFormula& formula) {
  std::ostringstream out;
  out << "p cnf " << formula.num_variables() << ' ' << formula.num_clauses() << '\n';
  for (const Clause& clause : formula.clauses()) {
    for (Literal lit : clause) out << lit.to_dimacs() << ' ';
    out << "0\n";
  }
  return out.str();
}

CnfFormula read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_dimacs(in);
}

}  // namespace tokensat
