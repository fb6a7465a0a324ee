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

// Entangling quantization of 2x2 games.
//
// Each player holds one qubit of the state J(gamma)|CC>, applies a local
// unitary move, the pair is disentangled with J(gamma)^dagger and measured in
// the computational basis. Bit 0 stands for the first classical move (C),
// bit 1 for the second (D); the row player owns the first tensor factor.
// The measured outcome selects a cell of the base game.
//
// Moves come from the two-parameter family
//
//   U(theta, phi) = [[ e^{i phi} cos(theta/2),  sin(theta/2)           ],
//                    [ -sin(theta/2),           e^{-i phi} cos(theta/2) ]]
//
// with theta in [0, pi] and phi in [0, pi/2]. C = U(0, 0) is the identity,
// D = U(pi, 0) flips the bit, and Q = U(0, pi/2) = diag(i, -i).

#ifndef QGAME_QUANTIZER_H_
#define QGAME_QUANTIZER_H_

#include <array>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qgame/complexmath.h"
#include "qgame/game.h"

namespace qgame {

struct StrategyAngles {
  double theta = 0.0;
  double phi = 0.0;
};

class StrategyUnitary {
 public:
  // U(theta, phi). An empty label becomes "U(theta,phi)". Throws
  // Error(kOutOfRange) when an angle leaves its range.
  static StrategyUnitary FromAngles(double theta, double phi, std::string label = "");
  // Any 2x2 unitary; no angles are attached.
  static StrategyUnitary FromMatrix(std::string label, const ComplexMatrix& matrix);
  // "C", "D" or "Q".
  static StrategyUnitary Named(const std::string& name);

  static StrategyUnitary C() { return Named("C"); }
  static StrategyUnitary D() { return Named("D"); }
  static StrategyUnitary Q() { return Named("Q"); }

  const std::string& label() const { return label_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  const std::optional<StrategyAngles>& angles() const { return angles_; }

 private:
  StrategyUnitary(std::string label, ComplexMatrix matrix,
                  std::optional<StrategyAngles> angles);

  std::string label_;
  ComplexMatrix matrix_;
  std::optional<StrategyAngles> angles_;
};

// Raw U(theta, phi) matrix without range checks.
ComplexMatrix StrategyMatrix(double theta, double phi);

// Parses "C", "D", "Q", "theta,phi" or "U(theta,phi)".
StrategyUnitary ParseStrategy(const std::string& spec);
// Comma-separated list of the above, e.g. "C,D,Q,U(1.5707963267948966,0)".
// Parenthesized commas do not split.
std::vector<StrategyUnitary> ParseStrategyList(const std::string& spec);

struct QuantizationConfig {
  // Entanglement in [0, pi/2]. 0 reduces to the classical game.
  double gamma = std::numbers::pi / 2;
};

void ValidateConfig(const QuantizationConfig& cfg);

// cos(gamma/2) I + i sin(gamma/2) (D (x) D).
ComplexMatrix BuildEntangler(double gamma);

// Probabilities in outcome order CC, CD, DC, DD.
struct OutcomeDistribution {
  std::array<double, 4> p{};
};

ComplexVector FinalState(const StrategyUnitary& row, const StrategyUnitary& col,
                         const QuantizationConfig& cfg);

OutcomeDistribution ComputeOutcomeDistribution(const StrategyUnitary& row,
                                               const StrategyUnitary& col,
                                               const QuantizationConfig& cfg);

// Expectation of a distribution against a 2x2 base game.
PayoffPair ExpectedPayoffs(const BimatrixGame& base, const OutcomeDistribution& dist);

PayoffPair ExpectedPayoffs(const BimatrixGame& base, const StrategyUnitary& row,
                           const StrategyUnitary& col, const QuantizationConfig& cfg);

// Classical payout matrix over a finite strategy set.
BimatrixGame ExtendedMatrix(const BimatrixGame& base,
                            const std::vector<StrategyUnitary>& strategies,
                            const QuantizationConfig& cfg);

// Inclusive uniform grid over theta in [0, pi] and phi in [0, pi/2].
struct GridSpec {
  std::size_t theta_steps = 0;
  std::size_t phi_steps = 0;

  std::size_t size() const { return theta_steps * phi_steps; }
};

struct GridPoint {
  std::size_t theta_index = 0;
  std::size_t phi_index = 0;
  double theta = 0.0;
  double phi = 0.0;
};

// Both dimensions need at least 2 steps.
void ValidateGrid(const GridSpec& grid);
// Point number k in row-major (theta-major) order.
GridPoint GridPointAt(const GridSpec& grid, std::size_t k);

struct ScanResult {
  double max_payoff = 0.0;
  // Every grid point within 1e-12 of max_payoff, in row-major order.
  std::vector<GridPoint> argmax_points;
  GridSpec grid;
};

// Row player's best response over the grid against a fixed column move.
// `threads` partitions the grid (0 picks the hardware concurrency); the
// result does not depend on it.
ScanResult BestResponseScan(const BimatrixGame& base, const StrategyUnitary& opponent,
                            const QuantizationConfig& cfg, const GridSpec& grid,
                            unsigned threads = 1);

struct GridProfile {
  GridPoint row;
  GridPoint col;
};

// All grid profiles where neither player gains more than 1e-9 by switching
// to another grid point, ordered by (row point, column point).
std::vector<GridProfile> FindGridEquilibria(const BimatrixGame& base,
                                            const QuantizationConfig& cfg,
                                            const GridSpec& grid, unsigned threads = 1);

}  // namespace qgame

#endif  // QGAME_QUANTIZER_H_
