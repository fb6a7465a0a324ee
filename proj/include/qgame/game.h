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

// Two-player normal-form (bimatrix) games and their pure-strategy analysis.

#ifndef QGAME_GAME_H_
#define QGAME_GAME_H_

#include <compare>
#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qgame {

enum class Player { kRow, kCol };

struct PayoffPair {
  double row = 0.0;
  double col = 0.0;

  friend bool operator==(const PayoffPair&, const PayoffPair&) = default;
};

struct Profile {
  std::size_t row = 0;
  std::size_t col = 0;

  friend auto operator<=>(const Profile&, const Profile&) = default;
};

class BimatrixGame {
 public:
  // Throws Error(kInvalidArgument) on duplicate or malformed labels, a shape
  // mismatch, or non-finite payoffs. `payoffs` is row-major.
  BimatrixGame(std::string row_player, std::string col_player,
               std::vector<std::string> row_moves, std::vector<std::string> col_moves,
               std::vector<PayoffPair> payoffs);

  const std::string& row_player() const { return row_player_; }
  const std::string& col_player() const { return col_player_; }
  const std::vector<std::string>& row_moves() const { return row_moves_; }
  const std::vector<std::string>& col_moves() const { return col_moves_; }
  std::size_t num_rows() const { return row_moves_.size(); }
  std::size_t num_cols() const { return col_moves_.size(); }

  const PayoffPair& payoff(std::size_t row, std::size_t col) const;
  const PayoffPair& payoff(const Profile& p) const { return payoff(p.row, p.col); }
  double payoff_of(Player player, const Profile& p) const;

  std::size_t num_moves(Player player) const {
    return player == Player::kRow ? num_rows() : num_cols();
  }
  const std::vector<std::string>& moves(Player player) const {
    return player == Player::kRow ? row_moves_ : col_moves_;
  }

  // Index of a move label, or nullopt.
  std::optional<std::size_t> FindMove(Player player, std::string_view label) const;

  // "(rowLabel,colLabel)".
  std::string ProfileName(const Profile& p) const;

  // Swaps the players: the result's row player is this game's column player.
  BimatrixGame Transposed() const;

  friend bool operator==(const BimatrixGame&, const BimatrixGame&) = default;

 private:
  std::string row_player_;
  std::string col_player_;
  std::vector<std::string> row_moves_;
  std::vector<std::string> col_moves_;
  std::vector<PayoffPair> payoffs_;
};

// Same players, labels and shape; payoffs equal within tol.
bool ApproxEqual(const BimatrixGame& a, const BimatrixGame& b, double tol);

struct EquilibriumReport {
  std::vector<Profile> strict_nash;
  std::vector<Profile> weak_nash;
  // The profile of strictly dominant moves, when both players have one.
  std::optional<Profile> dominant_profile;
};

// Line-oriented text format:
//   players: <row> <col>
//   rows: <label>...
//   cols: <label>...
//   payoffs:
//   <rowLabel> <colLabel> <rowPayoff> <colPayoff>   (one line per cell)
// '#' starts a comment, blank lines are ignored. Throws ParseError.
BimatrixGame ParseGame(std::istream& in);
BimatrixGame ParseGame(std::string_view text);
BimatrixGame LoadGame(const std::string& path);

// Canonical form: cells row-major, payoffs via FormatReal.
std::string SerializeGame(const BimatrixGame& g);

// The analysis functions compare payoffs with a tolerance: a difference
// counts only when it exceeds tol. The default of 0 is exact comparison,
// which is right for file-loaded games; pass kPayoffTol for computed ones.

// Exhaustive unilateral-deviation check.
EquilibriumReport PureNash(const BimatrixGame& g, double tol = 0.0);

std::vector<std::size_t> BestResponses(const BimatrixGame& g, Player player,
                                       std::size_t opponent_move, double tol = 0.0);

std::optional<std::size_t> StrictlyDominant(const BimatrixGame& g, Player player,
                                            double tol = 0.0);

// Profiles weakly better for both players and strictly better for one.
std::vector<Profile> ParetoDominators(const BimatrixGame& g, const Profile& p,
                                      double tol = 0.0);

// Subgame on the given labels, kept in the original game's order.
BimatrixGame Restrict(const BimatrixGame& g, const std::vector<std::string>& row_labels,
                      const std::vector<std::string>& col_labels);

// Joint (possibly correlated) distribution over a game's profiles, row-major.
class JointDistribution {
 public:
  // Throws Error(kInvalidArgument) unless weights are >= 0 and sum to 1
  // within 1e-12.
  JointDistribution(std::size_t rows, std::size_t cols, std::vector<double> weights);

  static JointDistribution PointMass(std::size_t rows, std::size_t cols, const Profile& p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double weight(std::size_t row, std::size_t col) const { return weights_[row * cols_ + col]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> weights_;
};

PayoffPair CorrelatedPayoff(const BimatrixGame& g, const JointDistribution& d);

}  // namespace qgame

#endif  // QGAME_GAME_H_
