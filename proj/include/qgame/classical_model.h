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

// Mediator table: a purely classical stand-in for the quantized game.
//
// For every pair of strategies the table records the outcome distribution
// the quantum protocol would produce. A mediator who receives both players'
// choices can then sample the outcome with ordinary randomness, so the
// quantized game is reproduced without any quantum resources.

#ifndef QGAME_CLASSICAL_MODEL_H_
#define QGAME_CLASSICAL_MODEL_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qgame/game.h"
#include "qgame/quantizer.h"

namespace qgame {

struct ModelEntry {
  OutcomeDistribution distribution;
  PayoffPair payoff;
};

// Plain data so tests can tamper with entries; Verify() catches that.
struct ClassicalModelTable {
  BimatrixGame base;
  QuantizationConfig config;
  std::vector<StrategyUnitary> strategies;
  // Row-major over strategies x strategies.
  std::vector<ModelEntry> entries;

  std::size_t size() const { return strategies.size(); }
  std::vector<std::string> labels() const;
  // Throws Error(kInvalidArgument) for unknown labels.
  std::size_t IndexOf(const std::string& label) const;
  const ModelEntry& at(const std::string& row, const std::string& col) const;
  ModelEntry& at(const std::string& row, const std::string& col);

  // The stored payoffs as an ordinary game.
  BimatrixGame PayoffGame() const;
};

ClassicalModelTable BuildModel(const BimatrixGame& base,
                               const std::vector<StrategyUnitary>& strategies,
                               const QuantizationConfig& cfg);

struct VerificationReport {
  bool passed = true;
  // One line per failing check, naming the profile, e.g. "(Q,Q): ...".
  std::vector<std::string> failures;
};

// Recomputes every profile through the quantum pipeline under `cfg` and
// compares payoffs, the distribution's own expectation and the extended
// matrix against the table, all within tol.
VerificationReport VerifyEquivalence(const ClassicalModelTable& table, const BimatrixGame& base,
                                     const QuantizationConfig& cfg, double tol);
// As above, first checking that `strategies` carries the table's labels.
VerificationReport VerifyEquivalence(const ClassicalModelTable& table, const BimatrixGame& base,
                                     const std::vector<StrategyUnitary>& strategies,
                                     const QuantizationConfig& cfg, double tol);

struct SampleReport {
  std::string row;
  std::string col;
  std::uint64_t trials = 0;
  // Outcome counts in order CC, CD, DC, DD.
  std::array<std::uint64_t, 4> counts{};
  double l1_distance = 0.0;
};

// i.i.d. draws by inverse CDF over CC, CD, DC, DD from a seeded mt19937_64.
SampleReport SamplePlay(const ClassicalModelTable& table, const std::string& row,
                        const std::string& col, std::uint64_t seed, std::uint64_t trials);

// Game file text for the payoff view, then "distributions:" and one
// "<row> <col> <pCC> <pCD> <pDC> <pDD>" line per profile.
std::string ExportModel(const ClassicalModelTable& table);

}  // namespace qgame

#endif  // QGAME_CLASSICAL_MODEL_H_
