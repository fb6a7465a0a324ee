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

#include "qgame/quantizer.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <set>
#include <thread>

#include "qgame/error.h"
#include "qgame/format.h"

namespace qgame {
namespace {

constexpr double kPi = std::numbers::pi;
// Slack for angles computed as grid fractions of pi.
constexpr double kAngleSlack = 1e-12;
constexpr double kTieTol = 1e-12;

double CheckAngle(double value, double hi, const char* name) {
  if (!std::isfinite(value) || value < -kAngleSlack || value > hi + kAngleSlack) {
    throw Error(ErrorCode::kOutOfRange, std::string(name) + " = " + FormatReal(value) +
                                            " is outside [0, " + FormatReal(hi) + "]");
  }
  return std::clamp(value, 0.0, hi);
}

void CheckTwoByTwo(const BimatrixGame& base) {
  if (base.num_rows() != 2 || base.num_cols() != 2) {
    throw Error(ErrorCode::kDimension, "quantization base game must be 2×2");
  }
}

double ParseAngle(std::string_view text, const std::string& spec) {
  std::string s(text);
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) {
    throw Error(ErrorCode::kInvalidArgument, "malformed strategy '" + spec + "'");
  }
  s = s.substr(b, e - b + 1);
  double value = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::kInvalidArgument, "malformed strategy '" + spec + "'");
  }
  return value;
}

// Runs body(begin, end) over [0, n) split into contiguous blocks.
void ParallelBlocks(std::size_t n, unsigned threads,
                    const std::function<void(std::size_t, std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    body(0, n);
    return;
  }
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  const std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    workers.emplace_back([&body, begin, end] { body(begin, end); });
  }
}

}  // namespace

StrategyUnitary::StrategyUnitary(std::string label, ComplexMatrix matrix,
                                 std::optional<StrategyAngles> angles)
    : label_(std::move(label)), matrix_(std::move(matrix)), angles_(angles) {}

ComplexMatrix StrategyMatrix(double theta, double phi) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  const Complex phase = std::polar(1.0, phi);
  return ComplexMatrix{phase * c, s, -s, std::conj(phase) * c};
}

StrategyUnitary StrategyUnitary::FromAngles(double theta, double phi, std::string label) {
  theta = CheckAngle(theta, kPi, "theta");
  phi = CheckAngle(phi, kPi / 2, "phi");
  if (label.empty()) label = "U(" + FormatReal(theta) + "," + FormatReal(phi) + ")";
  return StrategyUnitary(std::move(label), StrategyMatrix(theta, phi),
                         StrategyAngles{theta, phi});
}

StrategyUnitary StrategyUnitary::FromMatrix(std::string label, const ComplexMatrix& matrix) {
  if (matrix.dim() != 2) {
    throw Error(ErrorCode::kDimension, "strategy matrix must be 2x2");
  }
  if (!IsUnitary(matrix, kStructuralTol)) {
    throw Error(ErrorCode::kInvalidArgument, "strategy matrix '" + label + "' is not unitary");
  }
  if (label.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "strategy label must be non-empty");
  }
  return StrategyUnitary(std::move(label), matrix, std::nullopt);
}

StrategyUnitary StrategyUnitary::Named(const std::string& name) {
  // Exact matrices rather than trig evaluations, so C, D and Q carry no
  // rounding noise.
  if (name == "C") {
    return StrategyUnitary("C", ComplexMatrix::Identity(2), StrategyAngles{0.0, 0.0});
  }
  if (name == "D") {
    return StrategyUnitary("D", ComplexMatrix{0.0, 1.0, -1.0, 0.0}, StrategyAngles{kPi, 0.0});
  }
  if (name == "Q") {
    const Complex i(0.0, 1.0);
    return StrategyUnitary("Q", ComplexMatrix{i, 0.0, 0.0, -i}, StrategyAngles{0.0, kPi / 2});
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown named strategy '" + name + "'");
}

StrategyUnitary ParseStrategy(const std::string& spec) {
  if (spec == "C" || spec == "D" || spec == "Q") return StrategyUnitary::Named(spec);
  std::string_view body(spec);
  if (body.size() >= 3 && body.substr(0, 2) == "U(" && body.back() == ')') {
    body = body.substr(2, body.size() - 3);
  }
  const auto comma = body.find(',');
  if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos) {
    throw Error(ErrorCode::kInvalidArgument,
                "malformed strategy '" + spec + "' (expected C, D, Q, theta,phi or U(theta,phi))");
  }
  return StrategyUnitary::FromAngles(ParseAngle(body.substr(0, comma), spec),
                                     ParseAngle(body.substr(comma + 1), spec));
}

std::vector<StrategyUnitary> ParseStrategyList(const std::string& spec) {
  std::vector<std::string> items;
  std::string current;
  int depth = 0;
  for (char ch : spec) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth < 0) throw Error(ErrorCode::kInvalidArgument, "unbalanced ')' in '" + spec + "'");
    if (ch == ',' && depth == 0) {
      items.push_back(current);
      current.clear();
    } else if (ch != ' ') {
      current += ch;
    }
  }
  if (depth != 0) throw Error(ErrorCode::kInvalidArgument, "unbalanced '(' in '" + spec + "'");
  items.push_back(current);

  std::vector<StrategyUnitary> result;
  for (const auto& item : items) {
    if (item.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "empty entry in strategy list '" + spec + "'");
    }
    result.push_back(ParseStrategy(item));
  }
  return result;
}

void ValidateConfig(const QuantizationConfig& cfg) {
  CheckAngle(cfg.gamma, kPi / 2, "gamma");
}

ComplexMatrix BuildEntangler(double gamma) {
  gamma = CheckAngle(gamma, kPi / 2, "gamma");
  const ComplexMatrix flip{0.0, 1.0, -1.0, 0.0};
  const ComplexMatrix dd = Tensor(flip, flip);
  return ComplexMatrix::Identity(4).Scaled(std::cos(gamma / 2)) +
         dd.Scaled(Complex(0.0, std::sin(gamma / 2)));
}

ComplexVector FinalState(const StrategyUnitary& row, const StrategyUnitary& col,
                         const QuantizationConfig& cfg) {
  const ComplexMatrix j = BuildEntangler(cfg.gamma);
  const ComplexVector start = ComplexVector::Basis(4, 0);
  const ComplexVector entangled = MatVec(j, start);
  const ComplexVector moved = MatVec(Tensor(row.matrix(), col.matrix()), entangled);
  return MatVec(Adjoint(j), moved);
}

OutcomeDistribution ComputeOutcomeDistribution(const StrategyUnitary& row,
                                               const StrategyUnitary& col,
                                               const QuantizationConfig& cfg) {
  const ComplexVector psi = FinalState(row, col, cfg);
  OutcomeDistribution dist;
  for (std::size_t k = 0; k < 4; ++k) dist.p[k] = std::max(0.0, std::norm(psi[k]));
  return dist;
}

PayoffPair ExpectedPayoffs(const BimatrixGame& base, const OutcomeDistribution& dist) {
  CheckTwoByTwo(base);
  PayoffPair total;
  for (std::size_t k = 0; k < 4; ++k) {
    const PayoffPair& cell = base.payoff(k / 2, k % 2);
    total.row += dist.p[k] * cell.row;
    total.col += dist.p[k] * cell.col;
  }
  return total;
}

PayoffPair ExpectedPayoffs(const BimatrixGame& base, const StrategyUnitary& row,
                           const StrategyUnitary& col, const QuantizationConfig& cfg) {
  CheckTwoByTwo(base);
  return ExpectedPayoffs(base, ComputeOutcomeDistribution(row, col, cfg));
}

BimatrixGame ExtendedMatrix(const BimatrixGame& base,
                            const std::vector<StrategyUnitary>& strategies,
                            const QuantizationConfig& cfg) {
  CheckTwoByTwo(base);
  ValidateConfig(cfg);
  if (strategies.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "strategy set is empty");
  }
  std::set<std::string> seen;
  std::vector<std::string> labels;
  for (const auto& s : strategies) {
    if (!seen.insert(s.label()).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate strategy label '" + s.label() + "'");
    }
    labels.push_back(s.label());
  }
  std::vector<PayoffPair> payoffs;
  payoffs.reserve(strategies.size() * strategies.size());
  for (const auto& a : strategies)
    for (const auto& b : strategies) payoffs.push_back(ExpectedPayoffs(base, a, b, cfg));
  return BimatrixGame(base.row_player(), base.col_player(), labels, labels,
                      std::move(payoffs));
}

void ValidateGrid(const GridSpec& grid) {
  if (grid.theta_steps < 2 || grid.phi_steps < 2) {
    throw Error(ErrorCode::kInvalidArgument, "grid needs at least 2 steps in each dimension");
  }
}

GridPoint GridPointAt(const GridSpec& grid, std::size_t k) {
  GridPoint pt;
  pt.theta_index = k / grid.phi_steps;
  pt.phi_index = k % grid.phi_steps;
  // Written as pi * (i / (n-1)) so the last point lands exactly on the bound.
  pt.theta = kPi * (static_cast<double>(pt.theta_index) /
                    static_cast<double>(grid.theta_steps - 1));
  pt.phi = (kPi / 2) *
           (static_cast<double>(pt.phi_index) / static_cast<double>(grid.phi_steps - 1));
  return pt;
}

ScanResult BestResponseScan(const BimatrixGame& base, const StrategyUnitary& opponent,
                            const QuantizationConfig& cfg, const GridSpec& grid,
                            unsigned threads) {
  CheckTwoByTwo(base);
  ValidateConfig(cfg);
  ValidateGrid(grid);

  std::vector<double> values(grid.size());
  ParallelBlocks(grid.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const GridPoint pt = GridPointAt(grid, k);
      const auto own = StrategyUnitary::FromAngles(pt.theta, pt.phi);
      values[k] = ExpectedPayoffs(base, own, opponent, cfg).row;
    }
  });

  // Sequential reduction keeps the result independent of the partitioning.
  ScanResult result;
  result.grid = grid;
  result.max_payoff = *std::max_element(values.begin(), values.end());
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] >= result.max_payoff - kTieTol) result.argmax_points.push_back(GridPointAt(grid, k));
  }
  return result;
}

std::vector<GridProfile> FindGridEquilibria(const BimatrixGame& base,
                                            const QuantizationConfig& cfg,
                                            const GridSpec& grid, unsigned threads) {
  CheckTwoByTwo(base);
  ValidateConfig(cfg);
  ValidateGrid(grid);

  const std::size_t n = grid.size();
  std::vector<StrategyUnitary> moves;
  moves.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const GridPoint pt = GridPointAt(grid, k);
    moves.push_back(StrategyUnitary::FromAngles(pt.theta, pt.phi));
  }

  std::vector<PayoffPair> table(n * n);
  ParallelBlocks(n, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t a = begin; a < end; ++a)
      for (std::size_t b = 0; b < n; ++b)
        table[a * n + b] = ExpectedPayoffs(base, moves[a], moves[b], cfg);
  });

  // Best achievable payoff for the row player against each column point, and
  // for the column player against each row point.
  std::vector<double> best_row(n, -HUGE_VAL);
  std::vector<double> best_col(n, -HUGE_VAL);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      best_row[b] = std::max(best_row[b], table[a * n + b].row);
      best_col[a] = std::max(best_col[a], table[a * n + b].col);
    }

  std::vector<GridProfile> result;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const PayoffPair& here = table[a * n + b];
      if (here.row >= best_row[b] - kPayoffTol && here.col >= best_col[a] - kPayoffTol) {
        result.push_back({GridPointAt(grid, a), GridPointAt(grid, b)});
      }
    }
  return result;
}

}  // namespace qgame
