// Copyright 2026 The qgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Thin RAII layer over the C API for the command-line tool.

#ifndef QGAME_TOOLS_HANDLES_H_
#define QGAME_TOOLS_HANDLES_H_

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgame/qgame.h"

namespace qgame_cli {

// Usage and precondition failures; reported on stderr with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void Check(qg_status status) {
  if (status != QG_OK) throw UsageError(qg_last_error());
}

struct GameDeleter {
  void operator()(qg_game* g) const { qg_game_free(g); }
};
struct StrategySetDeleter {
  void operator()(qg_strategy_set* s) const { qg_strategy_set_free(s); }
};
struct ModelDeleter {
  void operator()(qg_model* m) const { qg_model_free(m); }
};
struct StringDeleter {
  void operator()(char* s) const { qg_string_free(s); }
};

using Game = std::unique_ptr<qg_game, GameDeleter>;
using StrategySet = std::unique_ptr<qg_strategy_set, StrategySetDeleter>;
using Model = std::unique_ptr<qg_model, ModelDeleter>;

inline std::string TakeString(char* raw) {
  std::unique_ptr<char, StringDeleter> owned(raw);
  return owned ? std::string(owned.get()) : std::string();
}

inline Game LoadGame(const std::string& path) {
  qg_game* raw = nullptr;
  Check(qg_game_load(path.c_str(), &raw));
  return Game(raw);
}

inline Game ParseGame(const std::string& text) {
  qg_game* raw = nullptr;
  Check(qg_game_parse(text.c_str(), &raw));
  return Game(raw);
}

inline StrategySet ParseStrategies(const std::string& spec) {
  qg_strategy_set* raw = nullptr;
  Check(qg_strategy_set_parse(spec.c_str(), &raw));
  return StrategySet(raw);
}

inline Game Extended(const qg_game* base, const qg_strategy_set* set, double gamma) {
  qg_game* raw = nullptr;
  Check(qg_extended_matrix(base, set, gamma, &raw));
  return Game(raw);
}

inline std::string Serialize(const qg_game* g) {
  char* raw = nullptr;
  Check(qg_game_serialize(g, &raw));
  return TakeString(raw);
}

inline std::string Real(double v) {
  char buf[64];
  Check(qg_format_real(v, buf, sizeof buf));
  return buf;
}

inline std::string Fixed(double v, int decimals, bool trim) {
  char buf[64];
  Check(qg_format_fixed(v, decimals, trim ? 1 : 0, buf, sizeof buf));
  return buf;
}

inline std::string Label(const qg_game* g, qg_player p, size_t i) {
  const char* s = nullptr;
  Check(qg_game_move_label(g, p, i, &s));
  return s;
}

inline std::string PlayerName(const qg_game* g, qg_player p) {
  const char* s = nullptr;
  Check(qg_game_player_name(g, p, &s));
  return s;
}

inline std::string ProfileName(const qg_game* g, qg_profile p) {
  return "(" + Label(g, QG_PLAYER_ROW, p.row) + "," + Label(g, QG_PLAYER_COL, p.col) + ")";
}

struct NashSets {
  std::vector<qg_profile> strict_nash;
  std::vector<qg_profile> weak_nash;
};

inline NashSets PureNash(const qg_game* g, double tol) {
  size_t ns = 0, nw = 0;
  Check(qg_pure_nash(g, tol, nullptr, &ns, nullptr, &nw));
  NashSets out{std::vector<qg_profile>(ns), std::vector<qg_profile>(nw)};
  Check(qg_pure_nash(g, tol, out.strict_nash.data(), &ns, out.weak_nash.data(), &nw));
  return out;
}

inline std::vector<qg_profile> ParetoDominators(const qg_game* g, qg_profile p, double tol) {
  size_t n = 0;
  Check(qg_pareto_dominators(g, p, tol, nullptr, &n));
  std::vector<qg_profile> out(n);
  Check(qg_pareto_dominators(g, p, tol, out.data(), &n));
  return out;
}

// Index of the strictly dominant move, or -1.
inline long Dominant(const qg_game* g, qg_player p, double tol) {
  int found = 0;
  size_t move = 0;
  Check(qg_strictly_dominant(g, p, tol, &found, &move));
  return found ? static_cast<long>(move) : -1;
}

}  // namespace qgame_cli

#endif  // QGAME_TOOLS_HANDLES_H_
