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

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "tokensat/game.hpp"
#include "tokensat/solvers.hpp"

namespace tokensat {

enum class Mode { Original, Variant };
enum class Status { Playing, Won, Lost };

std::string_view to_string(Mode m);
std::string_view to_string(Status s);

// An HTTP-shaped failure: status code plus a machine-readable reason.
class ServiceError : public std::runtime_error {
 public:
  ServiceError(int status, std::string reason, const std::string& message)
      : std::runtime_error(message), status_(status), reason_(std::move(reason)) {}

  int status() const { return status_; }
  const std::string& reason() const { return reason_; }

 private:
  int status_;
  std::string reason_;
};

struct OriginalMove {
  Color color;
  Shape removed;

  friend bool operator==(const OriginalMove&, const OriginalMove&) = default;
};

struct HintMove {
  // box_index is set only in variant mode; shape is the removed shape in
  // original mode and the token's shape in variant mode.
  std::optional<size_t> box_index;
  Token token;
};

// One game in progress. Every mutation recomputes the status from the
// instance and move history. Not thread-safe.
class Session {
 public:
  // Throws ServiceError 422 for variant play on a board with an empty box.
  Session(std::string id, Mode mode, GameInstance instance);

  const std::string& id() const { return id_; }
  Mode mode() const { return mode_; }
  Status status() const { return status_; }
  const GameInstance& instance() const { return *instance_; }
  const std::vector<Box>& boxes() const;
  const PartialDecision& decided() const { return decided_; }
  const std::vector<OriginalMove>& original_history() const { return original_history_; }
  const std::vector<VariantMove>& variant_history() const;

  // Throw ServiceError: 400 malformed, 409 illegal.
  void apply(const OriginalMove& move);
  void apply(const VariantMove& move);
  void undo();
  std::optional<HintMove> hint() const;

  nlohmann::ordered_json snapshot() const;

 private:
  void reset();
  void recompute_status();

  std::string id_;
  Mode mode_;
  std::shared_ptr<const GameInstance> instance_;
  Status status_ = Status::Playing;
  // Original mode.
  std::vector<Box> boxes_;
  PartialDecision decided_;
  std::vector<OriginalMove> original_history_;
  // Variant mode.
  std::optional<VariantState> variant_;
};

struct ServiceOptions {
  std::filesystem::path instance_dir;  // empty: builtins only
};

// Session registry behind the JSON API. Distinct sessions never block each
// other; calls on one session are serialized.
class GameService {
 public:
  explicit GameService(ServiceOptions options = {});

  // Each call returns the response body or throws ServiceError.
  nlohmann::ordered_json create(const nlohmann::json& request);
  nlohmann::ordered_json get(const std::string& id) const;
  nlohmann::ordered_json move(const std::string& id, const nlohmann::json& move);
  nlohmann::ordered_json undo(const std::string& id);
  nlohmann::ordered_json hint(const std::string& id) const;
  nlohmann::ordered_json list_instances() const;

  // Writes sessions/<id>.json under the instance dir; returns the count.
  size_t persist_sessions() const;
  size_t session_count() const;

 private:
  struct Entry {
    explicit Entry(Session s) : session(std::move(s)) {}
    mutable std::mutex mutex;
    Session session;
  };

  std::shared_ptr<Entry> find(const std::string& id) const;
  GameInstance resolve_source(const nlohmann::json& source) const;
  std::optional<GameInstance> load_catalog_instance(const std::string& id) const;
  std::string fresh_id() const;

  ServiceOptions options_;
  mutable std::shared_mutex registry_mutex_;
  std::unordered_map<std::string, std::shared_ptr<Entry>> sessions_;
};

}  // namespace tokensat
