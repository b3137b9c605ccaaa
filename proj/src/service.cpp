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

#include "tokensat/service.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>

#include "tokensat/game_json.hpp"
#include "tokensat/generators.hpp"
#include "tokensat/reduction.hpp"

namespace tokensat {
namespace {

constexpr const char* kPaperExample = "paper-example";
constexpr uint32_t kMaxGenVariables = 64;
constexpr uint64_t kMaxGenClauses = 512;

ServiceError bad_request(const std::string& message) {
  return ServiceError(400, "malformed-request", message);
}

ServiceError conflict(MoveError e) {
  std::string reason(to_string(e));
  return ServiceError(409, reason, reason);
}

uint64_t require_uint(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<int64_t>() < 0)
    throw bad_request(std::string("'") + key + "' must be a non-negative integer");
  return j[key].get<uint64_t>();
}

Shape require_shape(const nlohmann::json& j) {
  if (!j.contains("shape") || !j["shape"].is_string())
    throw bad_request("'shape' must be \"square\" or \"round\"");
  auto shape = parse_shape(j["shape"].get<std::string>());
  if (!shape) throw bad_request("'shape' must be \"square\" or \"round\"");
  return *shape;
}

nlohmann::ordered_json original_move_json(const OriginalMove& m) {
  nlohmann::ordered_json j;
  j["color"] = m.color.id;
  j["shape"] = to_string(m.removed);
  return j;
}

nlohmann::ordered_json variant_move_json(size_t box_index, const Token& t) {
  nlohmann::ordered_json j;
  j["boxIndex"] = box_index;
  j["color"] = t.color.id;
  j["shape"] = to_string(t.shape);
  return j;
}

bool safe_catalog_id(const std::string& id) {
  return !id.empty() && id.find('/') == std::string::npos &&
         id.find('\\') == std::string::npos && id.find("..") == std::string::npos;
}

}  // namespace

std::string_view to_string(Mode m) { return m == Mode::Original ? "original" : "variant"; }

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Playing: return "playing";
    case Status::Won: return "won";
    case Status::Lost: return "lost";
  }
  return "playing";
}

// ---------------------------------------------------------------------------

Session::Session(std::string id, Mode mode, GameInstance instance)
    : id_(std::move(id)), mode_(mode), instance_(std::make_shared<const GameInstance>(std::move(instance))) {
  if (mode_ == Mode::Variant && instance_->has_empty_box())
    throw ServiceError(422, "variant-with-empty-box",
                       "variant play needs every box to start with a token");
  reset();
}

void Session::reset() {
  boxes_ = instance_->boxes();
  decided_.assign(instance_->num_colors(), std::nullopt);
  original_history_.clear();
  if (mode_ == Mode::Variant) variant_.emplace(instance_);
  recompute_status();
}

const std::vector<Box>& Session::boxes() const {
  return mode_ == Mode::Variant ? variant_->remaining() : boxes_;
}

const std::vector<VariantMove>& Session::variant_history() const {
  static const std::vector<VariantMove> kNone;
  return variant_ ? variant_->history() : kNone;
}

void Session::recompute_status() {
  if (mode_ == Mode::Variant) {
    if (!variant_is_terminal(*variant_))
      status_ = Status::Playing;
    else
      status_ = variant_is_won(*variant_) ? Status::Won : Status::Lost;
    return;
  }
  // A box that empties can never refill, so the loss is declared at once.
  if (std::any_of(boxes_.begin(), boxes_.end(), [](const Box& b) { return b.empty(); })) {
    status_ = Status::Lost;
  } else if (boxes_.empty() ||
             std::all_of(decided_.begin(), decided_.end(), [](auto& d) { return d.has_value(); })) {
    status_ = Status::Won;
  } else {
    status_ = Status::Playing;
  }
}

void Session::apply(const OriginalMove& move) {
  if (mode_ != Mode::Original) throw bad_request("variant sessions take {boxIndex, color, shape}");
  if (status_ != Status::Playing) throw conflict(MoveError::GameOver);
  if (move.color.id == 0 || move.color.id > instance_->num_colors())
    throw bad_request("color " + std::to_string(move.color.id) + " is not on this board");
  auto& slot = decided_[move.color.id - 1];
  if (slot) throw conflict(MoveError::ColorAlreadyDecided);
  slot = move.removed;
  remove_all(boxes_, move.color, move.removed);
  original_history_.push_back(move);
  recompute_status();
}

void Session::apply(const VariantMove& move) {
  if (mode_ != Mode::Variant) throw bad_request("original sessions take {color, shape}");
  if (status_ != Status::Playing) throw conflict(MoveError::GameOver);
  if (move.box_index >= variant_->remaining().size())
    throw bad_request("box index " + std::to_string(move.box_index) + " out of range");
  try {
    variant_->apply(move);
  } catch (const IllegalMove& e) {
    throw conflict(e.reason());
  }
  recompute_status();
}

void Session::undo() {
  if (mode_ == Mode::Original) {
    if (original_history_.empty()) throw ServiceError(409, "nothing-to-undo", "no move to undo");
    auto moves = original_history_;
    moves.pop_back();
    reset();
    for (const auto& m : moves) apply(m);
    return;
  }
  if (variant_->history().empty()) throw ServiceError(409, "nothing-to-undo", "no move to undo");
  auto moves = variant_->history();
  moves.pop_back();
  variant_ = replay_variant(instance_, moves);
  recompute_status();
}

std::optional<HintMove> Session::hint() const {
  if (status_ != Status::Playing) throw conflict(MoveError::GameOver);
  if (mode_ == Mode::Original) {
    auto h = hint_original(*instance_, decided_);
    if (!h) return std::nullopt;
    return HintMove{std::nullopt, Token{h->first, h->second}};
  }

  // Any model of the residual board fixes a kept shape per color; a token
  // contradicting it can go, and every box keeps a consistent token.
  const auto& remaining = variant_->remaining();
  SolveResult result = dpll(decode(GameInstance(instance_->num_colors(), remaining)));
  if (!result.is_sat()) return std::nullopt;
  auto kept = [&](Color c) {
    return result.model()->value(Variable{c.id}) ? Shape::Square : Shape::Round;
  };
  for (size_t i = 0; i < remaining.size(); ++i) {
    if (remaining[i].size() < 2) continue;
    for (const Token& t : remaining[i])
      if (t.shape != kept(t.color)) return HintMove{i, t};
  }
  // Everything left agrees with the model: thin out a box that still holds
  // more than one token, keeping its first.
  for (size_t i = 0; i < remaining.size(); ++i)
    if (remaining[i].size() >= 2) return HintMove{i, remaining[i].back()};
  return std::nullopt;
}

nlohmann::ordered_json Session::snapshot() const {
  nlohmann::ordered_json j;
  j["mode"] = to_string(mode_);
  j["status"] = to_string(status_);
  j["numColors"] = instance_->num_colors();
  j["boxes"] = boxes_to_json(boxes());
  nlohmann::ordered_json decided = nlohmann::ordered_json::object();
  for (uint32_t c = 1; c <= decided_.size(); ++c)
    if (decided_[c - 1]) decided[std::to_string(c)] = to_string(*decided_[c - 1]);
  j["decided"] = std::move(decided);
  auto history = nlohmann::ordered_json::array();
  if (mode_ == Mode::Original) {
    for (const auto& m : original_history_) history.push_back(original_move_json(m));
  } else {
    for (const auto& m : variant_->history()) history.push_back(variant_move_json(m.box_index, m.token));
  }
  j["history"] = std::move(history);
  return j;
}

// ---------------------------------------------------------------------------

GameService::GameService(ServiceOptions options) : options_(std::move(options)) {}

std::string GameService::fresh_id() const {
  std::random_device rd;
  static constexpr char kHex[] = "0123456789abcdef";
  std::string id;
  for (int i = 0; i < 8; ++i) {
    uint32_t word = rd();
    for (int k = 0; k < 4; ++k) {
      id.push_back(kHex[(word >> (8 * k)) & 0xf]);
      id.push_back(kHex[(word >> (8 * k + 4)) & 0xf]);
    }
  }
  return id;
}

std::optional<GameInstance> GameService::load_catalog_instance(const std::string& id) const {
  if (id == kPaperExample) return encode(paper_example());
  if (options_.instance_dir.empty() || !safe_catalog_id(id)) return std::nullopt;
  auto path = options_.instance_dir / (id + ".json");
  if (!std::filesystem::is_regular_file(path)) return std::nullopt;
  try {
    return read_game_file(path.string());
  } catch (const std::exception& e) {
    throw bad_request("stored instance '" + id + "' is unreadable: " + e.what());
  }
}

GameInstance GameService::resolve_source(const nlohmann::json& source) const {
  if (!source.is_object()) throw bad_request("'source' must be an object");
  if (source.contains("builtin")) {
    if (!source["builtin"].is_string()) throw bad_request("'builtin' must be an instance id");
    auto id = source["builtin"].get<std::string>();
    auto instance = load_catalog_instance(id);
    if (!instance) throw bad_request("unknown instance '" + id + "'");
    return std::move(*instance);
  }
  if (source.contains("inline")) {
    try {
      return game_from_json(source["inline"]);
    } catch (const GameFormatError& e) {
      throw bad_request(e.what());
    }
  }
  if (source.contains("gen")) {
    const auto& g = source["gen"];
    if (!g.is_object()) throw bad_request("'gen' must be an object");
    GenSpec spec;
    spec.num_variables = static_cast<uint32_t>(std::min<uint64_t>(require_uint(g, "numVariables"), UINT32_MAX));
    spec.num_clauses = require_uint(g, "numClauses");
    spec.width = static_cast<uint32_t>(std::min<uint64_t>(require_uint(g, "width"), UINT32_MAX));
    spec.seed = g.contains("seed") ? require_uint(g, "seed") : 0;
    bool planted = g.value("planted", false);
    if (spec.num_variables > kMaxGenVariables || spec.num_clauses > kMaxGenClauses)
      throw bad_request("generated instances are limited to " + std::to_string(kMaxGenVariables) +
                        " variables and " + std::to_string(kMaxGenClauses) + " clauses");
    try {
      return encode(planted ? planted_sat(spec).formula : random_ksat(spec));
    } catch (const std::invalid_argument& e) {
      throw bad_request(e.what());
    }
  }
  throw bad_request("'source' needs one of builtin, inline, gen");
}

nlohmann::ordered_json GameService::create(const nlohmann::json& request) {
  if (!request.is_object() || !request.contains("source"))
    throw bad_request("request needs a 'source'");
  Mode mode = Mode::Original;
  if (request.contains("mode")) {
    const auto& m = request["mode"];
    if (m == "original")
      mode = Mode::Original;
    else if (m == "variant")
      mode = Mode::Variant;
    else
      throw bad_request("'mode' must be \"original\" or \"variant\"");
  }
  GameInstance instance = resolve_source(request["source"]);
  auto entry = std::make_shared<Entry>(Session(fresh_id(), mode, std::move(instance)));

  nlohmann::ordered_json out;
  out["sessionId"] = entry->session.id();
  out["snapshot"] = entry->session.snapshot();
  std::unique_lock lock(registry_mutex_);
  sessions_.emplace(entry->session.id(), std::move(entry));
  return out;
}

std::shared_ptr<GameService::Entry> GameService::find(const std::string& id) const {
  std::shared_lock lock(registry_mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw ServiceError(404, "unknown-session", "no session '" + id + "'");
  return it->second;
}

nlohmann::ordered_json GameService::get(const std::string& id) const {
  auto entry = find(id);
  std::lock_guard lock(entry->mutex);
  return entry->session.snapshot();
}

nlohmann::ordered_json GameService::move(const std::string& id, const nlohmann::json& move) {
  auto entry = find(id);
  if (!move.is_object()) throw bad_request("move must be a JSON object");
  std::lock_guard lock(entry->mutex);
  Session& s = entry->session;
  uint64_t color = require_uint(move, "color");
  if (color > UINT32_MAX) throw bad_request("color out of range");
  Shape shape = require_shape(move);
  if (s.mode() == Mode::Original) {
    s.apply(OriginalMove{Color{static_cast<uint32_t>(color)}, shape});
  } else {
    uint64_t box = require_uint(move, "boxIndex");
    if (color == 0 || color > s.instance().num_colors())
      throw bad_request("color " + std::to_string(color) + " is not on this board");
    s.apply(VariantMove{static_cast<size_t>(box), Token{Color{static_cast<uint32_t>(color)}, shape}});
  }
  return s.snapshot();
}

nlohmann::ordered_json GameService::undo(const std::string& id) {
  auto entry = find(id);
  std::lock_guard lock(entry->mutex);
  entry->session.undo();
  return entry->session.snapshot();
}

nlohmann::ordered_json GameService::hint(const std::string& id) const {
  auto entry = find(id);
  std::lock_guard lock(entry->mutex);
  const Session& s = entry->session;
  auto h = s.hint();
  nlohmann::ordered_json out;
  if (!h) {
    out["move"] = nullptr;
    out["message"] = "no winning continuation";
  } else if (h->box_index) {
    out["move"] = variant_move_json(*h->box_index, h->token);
    out["message"] = "remove this token; the board stays winnable";
  } else {
    out["move"] = original_move_json(OriginalMove{h->token.color, h->token.shape});
    out["message"] = "remove these tokens; the board stays winnable";
  }
  out["advisory"] = true;
  return out;
}

nlohmann::ordered_json GameService::list_instances() const {
  auto entries = nlohmann::ordered_json::array();
  auto describe = [](const std::string& id, const char* kind, const GameInstance& g) {
    nlohmann::ordered_json j;
    j["id"] = id;
    j["kind"] = kind;
    j["numColors"] = g.num_colors();
    j["numBoxes"] = g.num_boxes();
    j["numTokens"] = g.num_tokens();
    return j;
  };
  entries.push_back(describe(kPaperExample, "builtin", encode(paper_example())));

  if (!options_.instance_dir.empty() && std::filesystem::is_directory(options_.instance_dir)) {
    std::vector<std::filesystem::path> files;
    for (const auto& de : std::filesystem::directory_iterator(options_.instance_dir))
      if (de.is_regular_file() && de.path().extension() == ".json") files.push_back(de.path());
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
      std::string id = path.stem().string();
      if (id == kPaperExample) continue;
      try {
        entries.push_back(describe(id, "stored", read_game_file(path.string())));
      } catch (const std::exception& e) {
        std::cerr << "warning: skipping " << path << ": " << e.what() << '\n';
      }
    }
  }
  nlohmann::ordered_json out;
  out["instances"] = std::move(entries);
  return out;
}

size_t GameService::persist_sessions() const {
  if (options_.instance_dir.empty()) return 0;
  auto dir = options_.instance_dir / "sessions";
  std::filesystem::create_directories(dir);
  std::shared_lock lock(registry_mutex_);
  size_t written = 0;
  for (const auto& [id, entry] : sessions_) {
    std::lock_guard session_lock(entry->mutex);
    nlohmann::ordered_json j;
    j["sessionId"] = id;
    j["instance"] = game_to_json(entry->session.instance());
    j["snapshot"] = entry->session.snapshot();
    std::ofstream out(dir / (id + ".json"));
    out << j.dump() << '\n';
    if (out) ++written;
  }
  return written;
}

size_t GameService::session_count() const {
  std::shared_lock lock(registry_mutex_);
  return sessions_.size();
}

}  // namespace tokensat
