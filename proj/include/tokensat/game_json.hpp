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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tokensat/game.hpp"

namespace tokensat {

class GameFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"numColors":N,"boxes":[[{"color":1,"shape":"square"},...],...]} with keys
// in that order and no whitespace.
std::string serialize_game(const GameInstance& instance);

// Accepts any key order and whitespace; throws GameFormatError.
GameInstance parse_game(std::string_view text);
GameInstance game_from_json(const nlohmann::json& j);

nlohmann::ordered_json token_to_json(const Token& token);
nlohmann::ordered_json boxes_to_json(const std::vector<Box>& boxes);
nlohmann::ordered_json game_to_json(const GameInstance& instance);

GameInstance read_game_file(const std::string& path);

}  // namespace tokensat
