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

#include "tokensat/game_json.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace tokensat {
namespace {

uint32_t require_count(const nlohmann::json& j, const char* what) {
  if (!j.is_number_integer()) throw GameFormatError(std::string(what) + " must be an integer");
  auto v = j.get<int64_t>();
  if (v < 0 || v > std::numeric_limits<int32_t>::max())
    throw GameFormatError(std::string(what) + " out of range");
  return static_cast<uint32_t>(v);
}

}  // namespace

nlohmann::ordered_json token_to_json(const Token& token) {
  nlohmann::ordered_json j;
  j["color"] = token.color.id;
  j["shape"] = to_string(token.shape);
  return j;
}

nlohmann::ordered_json boxes_to_json(const std::vector<Box>& boxes) {
  auto out = nlohmann::ordered_json::array();
  for (const Box& box : boxes) {
    auto jb = nlohmann::ordered_json::array();
    for (const Token& t : box) jb.push_back(token_to_json(t));
    out.push_back(std::move(jb));
  }
  return out;
}

nlohmann::ordered_json game_to_json(const GameInstance& instance) {
  nlohmann::ordered_json j;
  j["numColors"] = instance.num_colors();
  j["boxes"] = boxes_to_json(instance.boxes());
  return j;
}

std::string serialize_game(const GameInstance& instance) { return game_to_json(instance).dump(); }

GameInstance game_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw GameFormatError("game instance must be a JSON object");
  if (!j.contains("numColors")) throw GameFormatError("missing 'numColors'");
  if (!j.contains("boxes") || !j["boxes"].is_array())
    throw GameFormatError("missing or non-array 'boxes'");
  GameInstance instance(require_count(j["numColors"], "numColors"));
  for (const auto& jb : j["boxes"]) {
    if (!jb.is_array()) throw GameFormatError("each box must be an array");
    Box box;
    for (const auto& jt : jb) {
      if (!jt.is_object() || !jt.contains("color") || !jt.contains("shape"))
        throw GameFormatError("token needs 'color' and 'shape'");
      uint32_t color = require_count(jt["color"], "color");
      if (!jt["shape"].is_string()) throw GameFormatError("shape must be a string");
      auto shape = parse_shape(jt["shape"].get<std::string>());
      if (!shape) throw GameFormatError("unknown shape '" + jt["shape"].get<std::string>() + "'");
      if (color == 0 || color > instance.num_colors())
        throw GameFormatError("token color " + std::to_string(color) + " outside 1.." +
                              std::to_string(instance.num_colors()));
      box.push_back(Token{Color{color}, *shape});
    }
    instance.add_box(std::move(box));
  }
  return instance;
}

GameInstance parse_game(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GameFormatError(std::string("invalid JSON: ") + e.what());
  }
  return game_from_json(j);
}

GameInstance read_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_game(buf.str());
}

}  // namespace tokensat
