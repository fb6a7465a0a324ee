/*
 * Copyright 2026 The qgame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libqgame.
 *
 * Objects are opaque handles created by qg_*_create / qg_*_parse style
 * functions and released with the matching qg_*_free. Every fallible call
 * returns a qg_status; on failure qg_last_error() describes the problem
 * (per thread, valid until the next failing call on that thread).
 *
 * Strings returned through `char**` out-parameters are heap allocated and
 * must be released with qg_string_free. `const char**` out-parameters point
 * into the owning handle and live as long as it does.
 *
 * List-returning calls use the two-call convention: pass a NULL buffer to
 * learn the count, then call again with a buffer of at least that many
 * elements. QG_ERR_BUFFER_TOO_SMALL reports the required count in *count.
 */

#ifndef QGAME_QGAME_H_
#define QGAME_QGAME_H_

#include <stddef.h>
#include <stdint.h>

#if defined(QGAME_BUILDING_LIBRARY)
#define QG_API __attribute__((visibility("default")))
#else
#define QG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qg_status {
  QG_OK = 0,
  QG_ERR_INVALID_ARGUMENT = 1,
  QG_ERR_PARSE = 2,
  QG_ERR_DIMENSION = 3,
  QG_ERR_OUT_OF_RANGE = 4,
  QG_ERR_IO = 5,
  QG_ERR_CONVERGENCE = 6,
  QG_ERR_BUFFER_TOO_SMALL = 7,
  QG_ERR_INTERNAL = 8
} qg_status;

typedef enum qg_player { QG_PLAYER_ROW = 0, QG_PLAYER_COL = 1 } qg_player;

typedef struct qg_game qg_game;
typedef struct qg_strategy_set qg_strategy_set;
typedef struct qg_model qg_model;

typedef struct qg_profile {
  size_t row;
  size_t col;
} qg_profile;

typedef struct qg_grid_point {
  size_t theta_index;
  size_t phi_index;
  double theta;
  double phi;
} qg_grid_point;

typedef struct qg_grid_profile {
  qg_grid_point row;
  qg_grid_point col;
} qg_grid_profile;

typedef struct qg_sample_report {
  uint64_t trials;
  uint64_t counts[4]; /* CC, CD, DC, DD */
  double l1_distance;
} qg_sample_report;

QG_API const char* qg_version(void);
QG_API const char* qg_last_error(void);
QG_API void qg_string_free(char* s);

/* Canonical number text (9 significant digits, trimmed). Writes at most
 * `size` bytes including the terminator. */
QG_API qg_status qg_format_real(double value, char* buf, size_t size);
/* Fixed-point with `decimals` places; `trim` drops trailing zeros. */
QG_API qg_status qg_format_fixed(double value, int decimals, int trim, char* buf, size_t size);

/* ---- games ---------------------------------------------------------- */

QG_API qg_status qg_game_parse(const char* text, qg_game** out);
QG_API qg_status qg_game_load(const char* path, qg_game** out);
QG_API void qg_game_free(qg_game* game);

QG_API size_t qg_game_num_moves(const qg_game* game, qg_player player);
QG_API qg_status qg_game_move_label(const qg_game* game, qg_player player, size_t index,
                                    const char** out);
QG_API qg_status qg_game_player_name(const qg_game* game, qg_player player, const char** out);
QG_API qg_status qg_game_payoff(const qg_game* game, size_t row, size_t col, double* row_payoff,
                                double* col_payoff);
QG_API qg_status qg_game_serialize(const qg_game* game, char** out);
/* Labels are comma-separated, e.g. "C,D". */
QG_API qg_status qg_game_restrict(const qg_game* game, const char* row_labels,
                                  const char* col_labels, qg_game** out);
/* *equal is 1 when players, labels and payoffs (within tol) agree. */
QG_API qg_status qg_game_approx_equal(const qg_game* a, const qg_game* b, double tol, int* equal);

/* ---- classical analysis ---------------------------------------------- */

/* Pure Nash equilibria, sorted by (row, col). `tol` as in the C++ API. */
QG_API qg_status qg_pure_nash(const qg_game* game, double tol, qg_profile* strict_buf,
                              size_t* strict_count, qg_profile* weak_buf, size_t* weak_count);
/* *found is 0 when the player has no strictly dominant move. */
QG_API qg_status qg_strictly_dominant(const qg_game* game, qg_player player, double tol,
                                      int* found, size_t* move);
QG_API qg_status qg_best_responses(const qg_game* game, qg_player player, size_t opponent_move,
                                   double tol, size_t* buf, size_t* count);
QG_API qg_status qg_pareto_dominators(const qg_game* game, qg_profile profile, double tol,
                                      qg_profile* buf, size_t* count);
/* `weights` is row-major with rows*cols entries. */
QG_API qg_status qg_correlated_payoff(const qg_game* game, const double* weights, size_t count,
                                      double* row_payoff, double* col_payoff);

/* ---- quantization ---------------------------------------------------- */

/* Comma-separated strategies: C, D, Q or U(theta,phi). */
QG_API qg_status qg_strategy_set_parse(const char* spec, qg_strategy_set** out);
/* Adds U(theta, phi); NULL or "" label picks "U(theta,phi)". */
QG_API qg_status qg_strategy_set_add_angles(qg_strategy_set* set, const char* label,
                                            double theta, double phi);
/* Adds an explicit unitary; `re_im` holds 4 row-major (re, im) pairs. */
QG_API qg_status qg_strategy_set_add_matrix(qg_strategy_set* set, const char* label,
                                            const double re_im[8]);
QG_API qg_strategy_set* qg_strategy_set_create(void);
QG_API void qg_strategy_set_free(qg_strategy_set* set);
QG_API size_t qg_strategy_set_size(const qg_strategy_set* set);
QG_API qg_status qg_strategy_set_label(const qg_strategy_set* set, size_t index,
                                       const char** out);

/* J(gamma) as 16 row-major (re, im) pairs. */
QG_API qg_status qg_entangler(double gamma, double out_re_im[32]);
/* Final two-qubit state for strategies `row` and `col` of `set`; 4 (re, im) pairs. */
QG_API qg_status qg_final_state(const qg_strategy_set* set, size_t row, size_t col, double gamma,
                                double out_re_im[8]);
/* Probabilities in order CC, CD, DC, DD. */
QG_API qg_status qg_outcome_distribution(const qg_strategy_set* set, size_t row, size_t col,
                                         double gamma, double out[4]);
QG_API qg_status qg_expected_payoffs(const qg_game* base, const qg_strategy_set* set, size_t row,
                                     size_t col, double gamma, double* row_payoff,
                                     double* col_payoff);
QG_API qg_status qg_extended_matrix(const qg_game* base, const qg_strategy_set* set,
                                    double gamma, qg_game** out);

/* Row player's best response over the grid against `opponent` (a single
 * strategy spec such as "Q" or "1.57,0"). `threads` = 0 uses all cores. */
QG_API qg_status qg_best_response_scan(const qg_game* base, const char* opponent, double gamma,
                                       size_t theta_steps, size_t phi_steps, unsigned threads,
                                       double* max_payoff, qg_grid_point* buf, size_t* count);
QG_API qg_status qg_find_grid_equilibria(const qg_game* base, double gamma, size_t theta_steps,
                                         size_t phi_steps, unsigned threads,
                                         qg_grid_profile* buf, size_t* count);

/* ---- classical model ------------------------------------------------- */

QG_API qg_status qg_model_build(const qg_game* base, const qg_strategy_set* set, double gamma,
                                qg_model** out);
QG_API void qg_model_free(qg_model* model);
/* Overwrites one stored payoff pair (fault injection for checks). */
QG_API qg_status qg_model_set_payoff(qg_model* model, const char* row, const char* col,
                                     double row_payoff, double col_payoff);
QG_API qg_status qg_model_payoff_game(const qg_model* model, qg_game** out);
/* *passed is 1 on success; `report` (optional) lists failing profiles. */
QG_API qg_status qg_model_verify(const qg_model* model, const qg_game* base, double gamma,
                                 double tol, int* passed, char** report);
QG_API qg_status qg_model_sample(const qg_model* model, const char* row, const char* col,
                                 uint64_t seed, uint64_t trials, qg_sample_report* out);
QG_API qg_status qg_model_export(const qg_model* model, char** out);

#ifdef __cplusplus
}
#endif

#endif /* QGAME_QGAME_H_ */
