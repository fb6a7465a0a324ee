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

#include "qgame/qgame.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "qgame/classical_model.h"
#include "qgame/error.h"
#include "qgame/format.h"
#include "qgame/game.h"
#include "qgame/quantizer.h"

struct qg_game {
  qgame::BimatrixGame game;
};

struct qg_strategy_set {
  std::vector<qgame::StrategyUnitary> strategies;
};

struct qg_model {
  qgame::ClassicalModelTable table;
};

namespace {

thread_local std::string g_last_error;

qg_status Fail(qg_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs `body` and maps exceptions onto status codes.
template <typename Body>
qg_status Guard(Body&& body) {
  try {
    return body();
  } catch (const qgame::Error& e) {
    return Fail(static_cast<qg_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(QG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(QG_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(QG_ERR_INTERNAL, "unknown error");
  }
}

#define QG_REQUIRE(cond)                                                     \
  do {                                                                       \
    if (!(cond)) return Fail(QG_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qgame::Player ToPlayer(qg_player p) {
  if (p != QG_PLAYER_ROW && p != QG_PLAYER_COL) {
    throw qgame::Error(qgame::ErrorCode::kInvalidArgument, "invalid player");
  }
  return p == QG_PLAYER_ROW ? qgame::Player::kRow : qgame::Player::kCol;
}

std::vector<std::string> SplitLabels(const char* csv) {
  std::vector<std::string> out;
  std::string current;
  for (const char* p = csv; *p != '\0'; ++p) {
    if (*p == ',') {
      out.push_back(current);
      current.clear();
    } else if (*p != ' ') {
      current += *p;
    }
  }
  if (!current.empty() || !out.empty()) out.push_back(current);
  return out;
}

// Copies `items` into `buf` under the two-call convention.
template <typename T, typename U, typename Convert>
qg_status Emit(const std::vector<U>& items, T* buf, size_t* count, Convert convert) {
  const size_t capacity = *count;
  *count = items.size();
  if (buf == nullptr) return QG_OK;
  if (capacity < items.size()) {
    return Fail(QG_ERR_BUFFER_TOO_SMALL,
                "buffer holds " + std::to_string(capacity) + ", need " +
                    std::to_string(items.size()));
  }
  for (size_t i = 0; i < items.size(); ++i) buf[i] = convert(items[i]);
  return QG_OK;
}

qg_profile ToC(const qgame::Profile& p) { return {p.row, p.col}; }

qg_grid_point ToC(const qgame::GridPoint& p) {
  return {p.theta_index, p.phi_index, p.theta, p.phi};
}

const qgame::StrategyUnitary& StrategyAt(const qg_strategy_set* set, size_t index) {
  if (index >= set->strategies.size()) {
    throw qgame::Error(qgame::ErrorCode::kOutOfRange, "strategy index out of range");
  }
  return set->strategies[index];
}

void WriteComplex(std::span<const qgame::Complex> values, double* out) {
  for (size_t i = 0; i < values.size(); ++i) {
    out[2 * i] = values[i].real();
    out[2 * i + 1] = values[i].imag();
  }
}

}  // namespace

extern "C" {

const char* qg_version(void) { return "1.0.0"; }

const char* qg_last_error(void) { return g_last_error.c_str(); }

void qg_string_free(char* s) { std::free(s); }

qg_status qg_format_real(double value, char* buf, size_t size) {
  QG_REQUIRE(buf);
  return Guard([&] {
    const std::string s = qgame::FormatReal(value);
    if (s.size() + 1 > size) return Fail(QG_ERR_BUFFER_TOO_SMALL, "format buffer too small");
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return QG_OK;
  });
}

qg_status qg_format_fixed(double value, int decimals, int trim, char* buf, size_t size) {
  QG_REQUIRE(buf);
  return Guard([&] {
    if (decimals < 0 || decimals > 17) return Fail(QG_ERR_OUT_OF_RANGE, "decimals must be 0..17");
    const std::string s = trim ? qgame::FormatFixedTrimmed(value, decimals)
                               : qgame::FormatFixed(value, decimals);
    if (s.size() + 1 > size) return Fail(QG_ERR_BUFFER_TOO_SMALL, "format buffer too small");
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return QG_OK;
  });
}

qg_status qg_game_parse(const char* text, qg_game** out) {
  QG_REQUIRE(text && out);
  return Guard([&] {
    *out = new qg_game{qgame::ParseGame(std::string_view(text))};
    return QG_OK;
  });
}

qg_status qg_game_load(const char* path, qg_game** out) {
  QG_REQUIRE(path && out);
  return Guard([&] {
    *out = new qg_game{qgame::LoadGame(path)};
    return QG_OK;
  });
}

void qg_game_free(qg_game* game) { delete game; }

size_t qg_game_num_moves(const qg_game* game, qg_player player) {
  if (game == nullptr) return 0;
  return player == QG_PLAYER_ROW ? game->game.num_rows() : game->game.num_cols();
}

qg_status qg_game_move_label(const qg_game* game, qg_player player, size_t index,
                             const char** out) {
  QG_REQUIRE(game && out);
  return Guard([&] {
    const auto& moves = game->game.moves(ToPlayer(player));
    if (index >= moves.size()) return Fail(QG_ERR_OUT_OF_RANGE, "move index out of range");
    *out = moves[index].c_str();
    return QG_OK;
  });
}

qg_status qg_game_player_name(const qg_game* game, qg_player player, const char** out) {
  QG_REQUIRE(game && out);
  return Guard([&] {
    *out = ToPlayer(player) == qgame::Player::kRow ? game->game.row_player().c_str()
                                                   : game->game.col_player().c_str();
    return QG_OK;
  });
}

qg_status qg_game_payoff(const qg_game* game, size_t row, size_t col, double* row_payoff,
                         double* col_payoff) {
  QG_REQUIRE(game && row_payoff && col_payoff);
  return Guard([&] {
    const auto& p = game->game.payoff(row, col);
    *row_payoff = p.row;
    *col_payoff = p.col;
    return QG_OK;
  });
}

qg_status qg_game_serialize(const qg_game* game, char** out) {
  QG_REQUIRE(game && out);
  return Guard([&] {
    *out = CopyString(qgame::SerializeGame(game->game));
    return QG_OK;
  });
}

qg_status qg_game_restrict(const qg_game* game, const char* row_labels, const char* col_labels,
                           qg_game** out) {
  QG_REQUIRE(game && row_labels && col_labels && out);
  return Guard([&] {
    *out = new qg_game{
        qgame::Restrict(game->game, SplitLabels(row_labels), SplitLabels(col_labels))};
    return QG_OK;
  });
}

qg_status qg_game_approx_equal(const qg_game* a, const qg_game* b, double tol, int* equal) {
  QG_REQUIRE(a && b && equal);
  return Guard([&] {
    *equal = qgame::ApproxEqual(a->game, b->game, tol) ? 1 : 0;
    return QG_OK;
  });
}

qg_status qg_pure_nash(const qg_game* game, double tol, qg_profile* strict_buf,
                       size_t* strict_count, qg_profile* weak_buf, size_t* weak_count) {
  QG_REQUIRE(game && strict_count && weak_count);
  return Guard([&] {
    const auto report = qgame::PureNash(game->game, tol);
    auto convert = [](const qgame::Profile& p) { return ToC(p); };
    const qg_status s = Emit(report.strict_nash, strict_buf, strict_count, convert);
    const qg_status w = Emit(report.weak_nash, weak_buf, weak_count, convert);
    return s != QG_OK ? s : w;
  });
}

qg_status qg_strictly_dominant(const qg_game* game, qg_player player, double tol, int* found,
                               size_t* move) {
  QG_REQUIRE(game && found && move);
  return Guard([&] {
    const auto m = qgame::StrictlyDominant(game->game, ToPlayer(player), tol);
    *found = m.has_value() ? 1 : 0;
    *move = m.value_or(0);
    return QG_OK;
  });
}

qg_status qg_best_responses(const qg_game* game, qg_player player, size_t opponent_move,
                            double tol, size_t* buf, size_t* count) {
  QG_REQUIRE(game && count);
  return Guard([&] {
    const auto moves = qgame::BestResponses(game->game, ToPlayer(player), opponent_move, tol);
    return Emit(moves, buf, count, [](size_t m) { return m; });
  });
}

qg_status qg_pareto_dominators(const qg_game* game, qg_profile profile, double tol,
                               qg_profile* buf, size_t* count) {
  QG_REQUIRE(game && count);
  return Guard([&] {
    const auto found =
        qgame::ParetoDominators(game->game, qgame::Profile{profile.row, profile.col}, tol);
    return Emit(found, buf, count, [](const qgame::Profile& p) { return ToC(p); });
  });
}

qg_status qg_correlated_payoff(const qg_game* game, const double* weights, size_t count,
                               double* row_payoff, double* col_payoff) {
  QG_REQUIRE(game && weights && row_payoff && col_payoff);
  return Guard([&] {
    const auto& g = game->game;
    if (count != g.num_rows() * g.num_cols()) {
      return Fail(QG_ERR_DIMENSION, "weight count does not match the game shape");
    }
    const qgame::JointDistribution d(g.num_rows(), g.num_cols(),
                                     std::vector<double>(weights, weights + count));
    const auto p = qgame::CorrelatedPayoff(g, d);
    *row_payoff = p.row;
    *col_payoff = p.col;
    return QG_OK;
  });
}

qg_strategy_set* qg_strategy_set_create(void) { return new (std::nothrow) qg_strategy_set{}; }

void qg_strategy_set_free(qg_strategy_set* set) { delete set; }

size_t qg_strategy_set_size(const qg_strategy_set* set) {
  return set == nullptr ? 0 : set->strategies.size();
}

qg_status qg_strategy_set_parse(const char* spec, qg_strategy_set** out) {
  QG_REQUIRE(spec && out);
  return Guard([&] {
    *out = new qg_strategy_set{qgame::ParseStrategyList(spec)};
    return QG_OK;
  });
}

qg_status qg_strategy_set_add_angles(qg_strategy_set* set, const char* label, double theta,
                                     double phi) {
  QG_REQUIRE(set);
  return Guard([&] {
    set->strategies.push_back(
        qgame::StrategyUnitary::FromAngles(theta, phi, label == nullptr ? "" : label));
    return QG_OK;
  });
}

qg_status qg_strategy_set_add_matrix(qg_strategy_set* set, const char* label,
                                     const double re_im[8]) {
  QG_REQUIRE(set && label && re_im);
  return Guard([&] {
    std::vector<qgame::Complex> entries;
    for (int i = 0; i < 4; ++i) entries.emplace_back(re_im[2 * i], re_im[2 * i + 1]);
    set->strategies.push_back(
        qgame::StrategyUnitary::FromMatrix(label, qgame::ComplexMatrix(entries)));
    return QG_OK;
  });
}

qg_status qg_strategy_set_label(const qg_strategy_set* set, size_t index, const char** out) {
  QG_REQUIRE(set && out);
  return Guard([&] {
    *out = StrategyAt(set, index).label().c_str();
    return QG_OK;
  });
}

qg_status qg_entangler(double gamma, double out_re_im[32]) {
  QG_REQUIRE(out_re_im);
  return Guard([&] {
    WriteComplex(qgame::BuildEntangler(gamma).entries(), out_re_im);
    return QG_OK;
  });
}

qg_status qg_final_state(const qg_strategy_set* set, size_t row, size_t col, double gamma,
                         double out_re_im[8]) {
  QG_REQUIRE(set && out_re_im);
  return Guard([&] {
    const auto psi = qgame::FinalState(StrategyAt(set, row), StrategyAt(set, col),
                                       qgame::QuantizationConfig{gamma});
    WriteComplex(psi.entries(), out_re_im);
    return QG_OK;
  });
}

qg_status qg_outcome_distribution(const qg_strategy_set* set, size_t row, size_t col,
                                  double gamma, double out[4]) {
  QG_REQUIRE(set && out);
  return Guard([&] {
    const qgame::QuantizationConfig cfg{gamma};
    qgame::ValidateConfig(cfg);
    const auto dist =
        qgame::ComputeOutcomeDistribution(StrategyAt(set, row), StrategyAt(set, col), cfg);
    for (int k = 0; k < 4; ++k) out[k] = dist.p[k];
    return QG_OK;
  });
}

qg_status qg_expected_payoffs(const qg_game* base, const qg_strategy_set* set, size_t row,
                              size_t col, double gamma, double* row_payoff, double* col_payoff) {
  QG_REQUIRE(base && set && row_payoff && col_payoff);
  return Guard([&] {
    const qgame::QuantizationConfig cfg{gamma};
    qgame::ValidateConfig(cfg);
    const auto p =
        qgame::ExpectedPayoffs(base->game, StrategyAt(set, row), StrategyAt(set, col), cfg);
    *row_payoff = p.row;
    *col_payoff = p.col;
    return QG_OK;
  });
}

qg_status qg_extended_matrix(const qg_game* base, const qg_strategy_set* set, double gamma,
                             qg_game** out) {
  QG_REQUIRE(base && set && out);
  return Guard([&] {
    *out = new qg_game{
        qgame::ExtendedMatrix(base->game, set->strategies, qgame::QuantizationConfig{gamma})};
    return QG_OK;
  });
}

qg_status qg_best_response_scan(const qg_game* base, const char* opponent, double gamma,
                                size_t theta_steps, size_t phi_steps, unsigned threads,
                                double* max_payoff, qg_grid_point* buf, size_t* count) {
  QG_REQUIRE(base && opponent && max_payoff && count);
  return Guard([&] {
    const auto result = qgame::BestResponseScan(
        base->game, qgame::ParseStrategy(opponent), qgame::QuantizationConfig{gamma},
        qgame::GridSpec{theta_steps, phi_steps}, threads);
    *max_payoff = result.max_payoff;
    return Emit(result.argmax_points, buf, count,
                [](const qgame::GridPoint& p) { return ToC(p); });
  });
}

qg_status qg_find_grid_equilibria(const qg_game* base, double gamma, size_t theta_steps,
                                  size_t phi_steps, unsigned threads, qg_grid_profile* buf,
                                  size_t* count) {
  QG_REQUIRE(base && count);
  return Guard([&] {
    const auto found =
        qgame::FindGridEquilibria(base->game, qgame::QuantizationConfig{gamma},
                                  qgame::GridSpec{theta_steps, phi_steps}, threads);
    return Emit(found, buf, count, [](const qgame::GridProfile& p) {
      return qg_grid_profile{ToC(p.row), ToC(p.col)};
    });
  });
}

qg_status qg_model_build(const qg_game* base, const qg_strategy_set* set, double gamma,
                         qg_model** out) {
  QG_REQUIRE(base && set && out);
  return Guard([&] {
    *out = new qg_model{
        qgame::BuildModel(base->game, set->strategies, qgame::QuantizationConfig{gamma})};
    return QG_OK;
  });
}

void qg_model_free(qg_model* model) { delete model; }

qg_status qg_model_set_payoff(qg_model* model, const char* row, const char* col,
                              double row_payoff, double col_payoff) {
  QG_REQUIRE(model && row && col);
  return Guard([&] {
    model->table.at(row, col).payoff = qgame::PayoffPair{row_payoff, col_payoff};
    return QG_OK;
  });
}

qg_status qg_model_payoff_game(const qg_model* model, qg_game** out) {
  QG_REQUIRE(model && out);
  return Guard([&] {
    *out = new qg_game{model->table.PayoffGame()};
    return QG_OK;
  });
}

qg_status qg_model_verify(const qg_model* model, const qg_game* base, double gamma, double tol,
                          int* passed, char** report) {
  QG_REQUIRE(model && base && passed);
  return Guard([&] {
    const qgame::QuantizationConfig cfg{gamma};
    qgame::ValidateConfig(cfg);
    const auto result = qgame::VerifyEquivalence(model->table, base->game, cfg, tol);
    *passed = result.passed ? 1 : 0;
    if (report != nullptr) {
      std::ostringstream text;
      for (const auto& line : result.failures) text << line << '\n';
      *report = CopyString(text.str());
    }
    return QG_OK;
  });
}

qg_status qg_model_sample(const qg_model* model, const char* row, const char* col, uint64_t seed,
                          uint64_t trials, qg_sample_report* out) {
  QG_REQUIRE(model && row && col && out);
  return Guard([&] {
    const auto r = qgame::SamplePlay(model->table, row, col, seed, trials);
    out->trials = r.trials;
    for (int k = 0; k < 4; ++k) out->counts[k] = r.counts[k];
    out->l1_distance = r.l1_distance;
    return QG_OK;
  });
}

qg_status qg_model_export(const qg_model* model, char** out) {
  QG_REQUIRE(model && out);
  return Guard([&] {
    *out = CopyString(qgame::ExportModel(model->table));
    return QG_OK;
  });
}

}  // extern "C"
