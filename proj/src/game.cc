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

#include "qgame/game.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "qgame/error.h"
#include "qgame/format.h"

namespace qgame {
namespace {

bool ValidLabel(const std::string& label) {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(), [](unsigned char c) {
    return std::isspace(c) || c == '#' || std::iscntrl(c);
  });
}

void CheckLabels(const std::vector<std::string>& labels, const char* side) {
  if (labels.empty()) {
    throw Error(ErrorCode::kInvalidArgument, std::string(side) + " move list is empty");
  }
  std::set<std::string> seen;
  for (const auto& label : labels) {
    if (!ValidLabel(label)) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("invalid ") + side + " move label '" + label + "'");
    }
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("duplicate ") + side + " move label '" + label + "'");
    }
  }
}

std::vector<std::string> SplitWords(std::string_view line) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) words.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

double ParseNumber(const std::string& word, int line_no) {
  double value = 0.0;
  const char* first = word.data();
  const char* last = word.data() + word.size();
  if (!word.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw ParseError(line_no, "invalid payoff '" + word + "'");
  }
  return value;
}

// A header line "key: a b c"; returns the words after the key.
std::vector<std::string> ExpectHeader(const std::vector<std::string>& words,
                                      const std::string& key, int line_no) {
  if (words.empty() || words.front() != key + ":") {
    throw ParseError(line_no, "expected '" + key + ":' line");
  }
  return {words.begin() + 1, words.end()};
}

bool Exceeds(double lhs, double rhs, double tol) { return lhs > rhs + tol; }

}  // namespace

BimatrixGame::BimatrixGame(std::string row_player, std::string col_player,
                           std::vector<std::string> row_moves,
                           std::vector<std::string> col_moves,
                           std::vector<PayoffPair> payoffs)
    : row_player_(std::move(row_player)),
      col_player_(std::move(col_player)),
      row_moves_(std::move(row_moves)),
      col_moves_(std::move(col_moves)),
      payoffs_(std::move(payoffs)) {
  if (!ValidLabel(row_player_) || !ValidLabel(col_player_)) {
    throw Error(ErrorCode::kInvalidArgument, "player names must be non-empty words");
  }
  CheckLabels(row_moves_, "row");
  CheckLabels(col_moves_, "column");
  if (payoffs_.size() != row_moves_.size() * col_moves_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "payoff matrix shape does not match move lists");
  }
  for (const auto& p : payoffs_) {
    if (!std::isfinite(p.row) || !std::isfinite(p.col)) {
      throw Error(ErrorCode::kInvalidArgument, "payoffs must be finite");
    }
  }
}

const PayoffPair& BimatrixGame::payoff(std::size_t row, std::size_t col) const {
  if (row >= num_rows() || col >= num_cols()) {
    throw Error(ErrorCode::kOutOfRange, "profile index out of range");
  }
  return payoffs_[row * num_cols() + col];
}

double BimatrixGame::payoff_of(Player player, const Profile& p) const {
  const PayoffPair& pair = payoff(p);
  return player == Player::kRow ? pair.row : pair.col;
}

std::optional<std::size_t> BimatrixGame::FindMove(Player player,
                                                  std::string_view label) const {
  const auto& list = moves(player);
  auto it = std::find(list.begin(), list.end(), label);
  if (it == list.end()) return std::nullopt;
  return static_cast<std::size_t>(it - list.begin());
}

std::string BimatrixGame::ProfileName(const Profile& p) const {
  if (p.row >= num_rows() || p.col >= num_cols()) {
    throw Error(ErrorCode::kOutOfRange, "profile index out of range");
  }
  return "(" + row_moves_[p.row] + "," + col_moves_[p.col] + ")";
}

BimatrixGame BimatrixGame::Transposed() const {
  std::vector<PayoffPair> t;
  t.reserve(payoffs_.size());
  for (std::size_t c = 0; c < num_cols(); ++c)
    for (std::size_t r = 0; r < num_rows(); ++r) {
      const PayoffPair& p = payoff(r, c);
      t.push_back({p.col, p.row});
    }
  return BimatrixGame(col_player_, row_player_, col_moves_, row_moves_, std::move(t));
}

bool ApproxEqual(const BimatrixGame& a, const BimatrixGame& b, double tol) {
  if (a.row_player() != b.row_player() || a.col_player() != b.col_player() ||
      a.row_moves() != b.row_moves() || a.col_moves() != b.col_moves()) {
    return false;
  }
  for (std::size_t r = 0; r < a.num_rows(); ++r)
    for (std::size_t c = 0; c < a.num_cols(); ++c) {
      const PayoffPair& x = a.payoff(r, c);
      const PayoffPair& y = b.payoff(r, c);
      if (std::fabs(x.row - y.row) > tol || std::fabs(x.col - y.col) > tol) return false;
    }
  return true;
}

BimatrixGame ParseGame(std::istream& in) {
  struct Line {
    int number;
    std::vector<std::string> words;
  };
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto words = SplitWords(raw);
    if (!words.empty()) lines.push_back({number, std::move(words)});
  }

  const char* const kHeaders[] = {"players", "rows", "cols", "payoffs"};
  for (std::size_t h = 0; h < 4; ++h) {
    if (lines.size() <= h) {
      throw ParseError(number, std::string("unexpected end of input, expected '") +
                                   kHeaders[h] + ":' line");
    }
  }
  auto players = ExpectHeader(lines[0].words, "players", lines[0].number);
  if (players.size() != 2) {
    throw ParseError(lines[0].number, "'players:' needs exactly two names");
  }
  auto rows = ExpectHeader(lines[1].words, "rows", lines[1].number);
  auto cols = ExpectHeader(lines[2].words, "cols", lines[2].number);
  if (!ExpectHeader(lines[3].words, "payoffs", lines[3].number).empty()) {
    throw ParseError(lines[3].number, "'payoffs:' takes no arguments");
  }
  for (std::size_t h = 1; h <= 2; ++h) {
    const auto& list = h == 1 ? rows : cols;
    if (list.empty()) throw ParseError(lines[h].number, "empty move list");
    std::set<std::string> seen;
    for (const auto& label : list) {
      if (!seen.insert(label).second) {
        throw ParseError(lines[h].number, "duplicate move label '" + label + "'");
      }
    }
  }

  const std::size_t nr = rows.size();
  const std::size_t nc = cols.size();
  std::vector<std::optional<PayoffPair>> cells(nr * nc);
  for (std::size_t i = 4; i < lines.size(); ++i) {
    const auto& [line_no, words] = lines[i];
    if (words.size() != 4) {
      throw ParseError(line_no, "expected '<rowLabel> <colLabel> <rowPayoff> <colPayoff>'");
    }
    auto r = std::find(rows.begin(), rows.end(), words[0]);
    if (r == rows.end()) throw ParseError(line_no, "unknown row label '" + words[0] + "'");
    auto c = std::find(cols.begin(), cols.end(), words[1]);
    if (c == cols.end()) throw ParseError(line_no, "unknown column label '" + words[1] + "'");
    auto& cell = cells[(r - rows.begin()) * nc + (c - cols.begin())];
    if (cell) {
      throw ParseError(line_no, "duplicate payoff entry for (" + words[0] + "," + words[1] + ")");
    }
    cell = PayoffPair{ParseNumber(words[2], line_no), ParseNumber(words[3], line_no)};
  }

  std::vector<PayoffPair> payoffs;
  payoffs.reserve(cells.size());
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) {
      const auto& cell = cells[r * nc + c];
      if (!cell) {
        throw ParseError(0, "missing payoff entry for (" + rows[r] + "," + cols[c] + ")");
      }
      payoffs.push_back(*cell);
    }
  try {
    return BimatrixGame(players[0], players[1], std::move(rows), std::move(cols),
                        std::move(payoffs));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

BimatrixGame ParseGame(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseGame(in);
}

BimatrixGame LoadGame(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open game file '" + path + "'");
  try {
    return ParseGame(in);
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

std::string SerializeGame(const BimatrixGame& g) {
  std::ostringstream out;
  out << "players: " << g.row_player() << ' ' << g.col_player() << '\n';
  out << "rows:";
  for (const auto& m : g.row_moves()) out << ' ' << m;
  out << "\ncols:";
  for (const auto& m : g.col_moves()) out << ' ' << m;
  out << "\npayoffs:\n";
  for (std::size_t r = 0; r < g.num_rows(); ++r)
    for (std::size_t c = 0; c < g.num_cols(); ++c) {
      const PayoffPair& p = g.payoff(r, c);
      out << g.row_moves()[r] << ' ' << g.col_moves()[c] << ' ' << FormatReal(p.row) << ' '
          << FormatReal(p.col) << '\n';
    }
  return out.str();
}

EquilibriumReport PureNash(const BimatrixGame& g, double tol) {
  EquilibriumReport report;
  for (std::size_t r = 0; r < g.num_rows(); ++r) {
    for (std::size_t c = 0; c < g.num_cols(); ++c) {
      const PayoffPair& here = g.payoff(r, c);
      bool weak = true;
      bool strict = true;
      for (std::size_t r2 = 0; r2 < g.num_rows(); ++r2) {
        if (r2 == r) continue;
        const double alt = g.payoff(r2, c).row;
        if (Exceeds(alt, here.row, tol)) weak = false;
        if (!Exceeds(here.row, alt, tol)) strict = false;
      }
      for (std::size_t c2 = 0; c2 < g.num_cols(); ++c2) {
        if (c2 == c) continue;
        const double alt = g.payoff(r, c2).col;
        if (Exceeds(alt, here.col, tol)) weak = false;
        if (!Exceeds(here.col, alt, tol)) strict = false;
      }
      if (weak) report.weak_nash.push_back({r, c});
      if (weak && strict) report.strict_nash.push_back({r, c});
    }
  }
  auto row = StrictlyDominant(g, Player::kRow, tol);
  auto col = StrictlyDominant(g, Player::kCol, tol);
  if (row && col) report.dominant_profile = Profile{*row, *col};
  return report;
}

std::vector<std::size_t> BestResponses(const BimatrixGame& g, Player player,
                                       std::size_t opponent_move, double tol) {
  const Player opponent = player == Player::kRow ? Player::kCol : Player::kRow;
  if (opponent_move >= g.num_moves(opponent)) {
    throw Error(ErrorCode::kOutOfRange, "opponent move index out of range");
  }
  auto profile = [&](std::size_t own) {
    return player == Player::kRow ? Profile{own, opponent_move} : Profile{opponent_move, own};
  };
  double best = g.payoff_of(player, profile(0));
  for (std::size_t m = 1; m < g.num_moves(player); ++m)
    best = std::max(best, g.payoff_of(player, profile(m)));
  std::vector<std::size_t> result;
  for (std::size_t m = 0; m < g.num_moves(player); ++m) {
    if (!Exceeds(best, g.payoff_of(player, profile(m)), tol)) result.push_back(m);
  }
  return result;
}

std::optional<std::size_t> StrictlyDominant(const BimatrixGame& g, Player player,
                                            double tol) {
  const Player opponent = player == Player::kRow ? Player::kCol : Player::kRow;
  auto value = [&](std::size_t own, std::size_t other) {
    return g.payoff_of(player, player == Player::kRow ? Profile{own, other} : Profile{other, own});
  };
  for (std::size_t m = 0; m < g.num_moves(player); ++m) {
    bool dominant = true;
    for (std::size_t alt = 0; alt < g.num_moves(player) && dominant; ++alt) {
      if (alt == m) continue;
      for (std::size_t o = 0; o < g.num_moves(opponent); ++o) {
        if (!Exceeds(value(m, o), value(alt, o), tol)) {
          dominant = false;
          break;
        }
      }
    }
    // With a single move there is nothing to dominate.
    if (dominant && g.num_moves(player) > 1) return m;
  }
  return std::nullopt;
}

std::vector<Profile> ParetoDominators(const BimatrixGame& g, const Profile& p, double tol) {
  const PayoffPair& base = g.payoff(p);
  std::vector<Profile> result;
  for (std::size_t r = 0; r < g.num_rows(); ++r)
    for (std::size_t c = 0; c < g.num_cols(); ++c) {
      const PayoffPair& q = g.payoff(r, c);
      const bool weakly_better = !Exceeds(base.row, q.row, tol) && !Exceeds(base.col, q.col, tol);
      const bool strictly_better = Exceeds(q.row, base.row, tol) || Exceeds(q.col, base.col, tol);
      if (weakly_better && strictly_better) result.push_back({r, c});
    }
  return result;
}

BimatrixGame Restrict(const BimatrixGame& g, const std::vector<std::string>& row_labels,
                      const std::vector<std::string>& col_labels) {
  auto select = [&](Player player, const std::vector<std::string>& labels) {
    if (labels.empty()) throw Error(ErrorCode::kInvalidArgument, "restrict: empty label set");
    std::vector<bool> keep(g.num_moves(player), false);
    for (const auto& label : labels) {
      auto idx = g.FindMove(player, label);
      if (!idx) throw Error(ErrorCode::kInvalidArgument, "restrict: unknown label '" + label + "'");
      keep[*idx] = true;
    }
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < keep.size(); ++i)
      if (keep[i]) indices.push_back(i);
    return indices;
  };
  const auto rows = select(Player::kRow, row_labels);
  const auto cols = select(Player::kCol, col_labels);

  std::vector<std::string> row_moves;
  std::vector<std::string> col_moves;
  for (auto r : rows) row_moves.push_back(g.row_moves()[r]);
  for (auto c : cols) col_moves.push_back(g.col_moves()[c]);
  std::vector<PayoffPair> payoffs;
  for (auto r : rows)
    for (auto c : cols) payoffs.push_back(g.payoff(r, c));
  return BimatrixGame(g.row_player(), g.col_player(), std::move(row_moves),
                      std::move(col_moves), std::move(payoffs));
}

JointDistribution::JointDistribution(std::size_t rows, std::size_t cols,
                                     std::vector<double> weights)
    : rows_(rows), cols_(cols), weights_(std::move(weights)) {
  if (rows == 0 || cols == 0 || weights_.size() != rows * cols) {
    throw Error(ErrorCode::kInvalidArgument, "joint distribution shape mismatch");
  }
  double sum = 0.0;
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw Error(ErrorCode::kInvalidArgument, "joint distribution weights must be >= 0");
    }
    sum += w;
  }
  if (std::fabs(sum - 1.0) > 1e-12) {
    throw Error(ErrorCode::kInvalidArgument, "joint distribution weights must sum to 1");
  }
}

JointDistribution JointDistribution::PointMass(std::size_t rows, std::size_t cols,
                                               const Profile& p) {
  if (p.row >= rows || p.col >= cols) {
    throw Error(ErrorCode::kOutOfRange, "point mass outside the distribution shape");
  }
  std::vector<double> w(rows * cols, 0.0);
  w[p.row * cols + p.col] = 1.0;
  return JointDistribution(rows, cols, std::move(w));
}

PayoffPair CorrelatedPayoff(const BimatrixGame& g, const JointDistribution& d) {
  if (d.rows() != g.num_rows() || d.cols() != g.num_cols()) {
    throw Error(ErrorCode::kDimension, "distribution shape does not match the game");
  }
  PayoffPair total;
  for (std::size_t r = 0; r < g.num_rows(); ++r)
    for (std::size_t c = 0; c < g.num_cols(); ++c) {
      const double w = d.weight(r, c);
      if (w == 0.0) continue;
      total.row += w * g.payoff(r, c).row;
      total.col += w * g.payoff(r, c).col;
    }
  return total;
}

}  // namespace qgame
