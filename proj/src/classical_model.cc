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

#include "qgame/classical_model.h"

#include <cmath>
#include <random>
#include <sstream>

#include "qgame/error.h"
#include "qgame/format.h"

namespace qgame {
namespace {

std::string Pair(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

std::string Describe(const PayoffPair& p) {
  return "(" + FormatReal(p.row) + "," + FormatReal(p.col) + ")";
}

bool Close(const PayoffPair& a, const PayoffPair& b, double tol) {
  return std::fabs(a.row - b.row) <= tol && std::fabs(a.col - b.col) <= tol;
}

}  // namespace

std::vector<std::string> ClassicalModelTable::labels() const {
  std::vector<std::string> out;
  for (const auto& s : strategies) out.push_back(s.label());
  return out;
}

std::size_t ClassicalModelTable::IndexOf(const std::string& label) const {
  for (std::size_t i = 0; i < strategies.size(); ++i)
    if (strategies[i].label() == label) return i;
  throw Error(ErrorCode::kInvalidArgument, "unknown strategy label '" + label + "'");
}

const ModelEntry& ClassicalModelTable::at(const std::string& row, const std::string& col) const {
  return entries.at(IndexOf(row) * size() + IndexOf(col));
}

ModelEntry& ClassicalModelTable::at(const std::string& row, const std::string& col) {
  return entries.at(IndexOf(row) * size() + IndexOf(col));
}

BimatrixGame ClassicalModelTable::PayoffGame() const {
  std::vector<PayoffPair> payoffs;
  for (const auto& e : entries) payoffs.push_back(e.payoff);
  return BimatrixGame(base.row_player(), base.col_player(), labels(), labels(),
                      std::move(payoffs));
}

ClassicalModelTable BuildModel(const BimatrixGame& base,
                               const std::vector<StrategyUnitary>& strategies,
                               const QuantizationConfig& cfg) {
  // ExtendedMatrix validates shape, config and label uniqueness.
  const BimatrixGame extended = ExtendedMatrix(base, strategies, cfg);
  ClassicalModelTable table{base, cfg, strategies, {}};
  table.entries.reserve(strategies.size() * strategies.size());
  for (std::size_t a = 0; a < strategies.size(); ++a)
    for (std::size_t b = 0; b < strategies.size(); ++b) {
      table.entries.push_back(
          {ComputeOutcomeDistribution(strategies[a], strategies[b], cfg), extended.payoff(a, b)});
    }
  return table;
}

VerificationReport VerifyEquivalence(const ClassicalModelTable& table, const BimatrixGame& base,
                                     const QuantizationConfig& cfg, double tol) {
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "verification tolerance must be positive");
  }
  const std::size_t n = table.size();
  if (n == 0 || table.entries.size() != n * n) {
    throw Error(ErrorCode::kInvalidArgument, "model table is incomplete");
  }
  VerificationReport report;
  auto fail = [&](std::string msg) {
    report.passed = false;
    report.failures.push_back(std::move(msg));
  };

  const BimatrixGame extended = ExtendedMatrix(base, table.strategies, cfg);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const ModelEntry& entry = table.entries[a * n + b];
      const std::string name =
          Pair(table.strategies[a].label(), table.strategies[b].label());

      double sum = 0.0;
      bool valid = true;
      for (double p : entry.distribution.p) {
        if (!(p >= 0.0)) valid = false;
        sum += p;
      }
      if (!valid || std::fabs(sum - 1.0) > kStructuralTol) {
        fail(name + ": stored distribution is not a probability vector");
      }
      const PayoffPair implied = ExpectedPayoffs(base, entry.distribution);
      if (!Close(entry.payoff, implied, tol)) {
        fail(name + ": stored payoff " + Describe(entry.payoff) +
             " disagrees with its distribution " + Describe(implied));
      }
      const PayoffPair fresh =
          ExpectedPayoffs(base, table.strategies[a], table.strategies[b], cfg);
      if (!Close(entry.payoff, fresh, tol)) {
        fail(name + ": stored payoff " + Describe(entry.payoff) +
             " differs from quantum evaluation " + Describe(fresh));
      }
      if (!Close(entry.payoff, extended.payoff(a, b), tol)) {
        fail(name + ": stored payoff " + Describe(entry.payoff) +
             " differs from extended matrix " + Describe(extended.payoff(a, b)));
      }
    }
  }
  return report;
}

VerificationReport VerifyEquivalence(const ClassicalModelTable& table, const BimatrixGame& base,
                                     const std::vector<StrategyUnitary>& strategies,
                                     const QuantizationConfig& cfg, double tol) {
  std::vector<std::string> expected;
  for (const auto& s : strategies) expected.push_back(s.label());
  if (expected != table.labels()) {
    throw Error(ErrorCode::kInvalidArgument, "strategy set does not match the model table");
  }
  return VerifyEquivalence(table, base, cfg, tol);
}

SampleReport SamplePlay(const ClassicalModelTable& table, const std::string& row,
                        const std::string& col, std::uint64_t seed, std::uint64_t trials) {
  if (trials == 0) {
    throw Error(ErrorCode::kInvalidArgument, "trials must be positive");
  }
  const OutcomeDistribution& dist = table.at(row, col).distribution;
  std::array<double, 4> cdf{};
  double acc = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    acc += dist.p[k];
    cdf[k] = acc;
  }

  SampleReport report;
  report.row = row;
  report.col = col;
  report.trials = trials;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, acc);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const double u = unit(rng);
    std::size_t k = 0;
    while (k < 3 && !(u < cdf[k])) ++k;
    // Rounding at the top of the CDF must not select an impossible outcome.
    while (k > 0 && dist.p[k] == 0.0) --k;
    ++report.counts[k];
  }
  for (std::size_t k = 0; k < 4; ++k) {
    report.l1_distance +=
        std::fabs(static_cast<double>(report.counts[k]) / static_cast<double>(trials) - dist.p[k]);
  }
  return report;
}

std::string ExportModel(const ClassicalModelTable& table) {
  std::ostringstream out;
  out << SerializeGame(table.PayoffGame());
  out << "distributions:\n";
  const std::size_t n = table.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      out << table.strategies[a].label() << ' ' << table.strategies[b].label();
      for (double p : table.entries[a * n + b].distribution.p) out << ' ' << FormatReal(p);
      out << '\n';
    }
  return out.str();
}

}  // namespace qgame
