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

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "qgame/error.h"
#include "statevector_oracle.h"

namespace qgame {
namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);
const QuantizationConfig kMax{kPi / 2};
const QuantizationConfig kClassical{0.0};

BimatrixGame Pd() { return LoadGame(std::string(QGAME_FIXTURE_DIR) + "/pd.game"); }

oracle::Gate ToGate(const StrategyUnitary& s) {
  const auto& m = s.matrix();
  return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

void ExpectPayoff(const PayoffPair& got, double row, double col, double tol = kPayoffTol) {
  EXPECT_NEAR(got.row, row, tol);
  EXPECT_NEAR(got.col, col, tol);
}

void ExpectPointMass(const OutcomeDistribution& d, std::size_t outcome) {
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(d.p[k], k == outcome ? 1.0 : 0.0, 1e-12);
}

TEST(StrategyUnitaryTest, NamedMoves) {
  EXPECT_LE(MaxAbsDiff(StrategyUnitary::C().matrix(), ComplexMatrix::Identity(2)), 0.0);
  EXPECT_LE(MaxAbsDiff(StrategyUnitary::D().matrix(), ComplexMatrix{0.0, 1.0, -1.0, 0.0}), 0.0);
  EXPECT_LE(MaxAbsDiff(StrategyUnitary::Q().matrix(), ComplexMatrix{kI, 0.0, 0.0, -kI}), 0.0);
  EXPECT_THROW(StrategyUnitary::Named("X"), Error);
}

TEST(StrategyUnitaryTest, FormulaAtNamedAngles) {
  EXPECT_LE(MaxAbsDiff(StrategyUnitary::FromAngles(0, 0).matrix(), ComplexMatrix::Identity(2)),
            1e-12);
  EXPECT_LE(MaxAbsDiff(StrategyUnitary::FromAngles(kPi, 0).matrix(),
                       StrategyUnitary::D().matrix()),
            1e-12);
  EXPECT_LE(MaxAbsDiff(StrategyUnitary::FromAngles(0, kPi / 2).matrix(),
                       StrategyUnitary::Q().matrix()),
            1e-12);
  for (const char* name : {"C", "D", "Q"}) {
    const auto s = StrategyUnitary::Named(name);
    ASSERT_TRUE(s.angles().has_value());
    EXPECT_LE(MaxAbsDiff(s.matrix(), StrategyMatrix(s.angles()->theta, s.angles()->phi)), 1e-12);
  }
}

TEST(StrategyUnitaryTest, RangeChecks) {
  EXPECT_THROW(StrategyUnitary::FromAngles(-0.1, 0), Error);
  EXPECT_THROW(StrategyUnitary::FromAngles(kPi + 0.1, 0), Error);
  EXPECT_THROW(StrategyUnitary::FromAngles(0, kPi), Error);
  EXPECT_THROW(StrategyUnitary::FromAngles(NAN, 0), Error);
  EXPECT_THROW(StrategyUnitary::FromMatrix("S", ComplexMatrix{1.0, 1.0, 0.0, 1.0}), Error);
  EXPECT_EQ(StrategyUnitary::FromAngles(kPi / 2, 0).label(), "U(1.57079633,0)");
}

TEST(StrategyUnitaryTest, UnitaryAcrossGrid) {
  const GridSpec grid{101, 51};
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto pt = GridPointAt(grid, k);
    EXPECT_TRUE(IsUnitary(StrategyUnitary::FromAngles(pt.theta, pt.phi).matrix(), 1e-12));
  }
}

TEST(StrategyParseTest, Specs) {
  EXPECT_EQ(ParseStrategy("Q").label(), "Q");
  const auto s = ParseStrategy("1.5707963267948966,0");
  ASSERT_TRUE(s.angles().has_value());
  EXPECT_DOUBLE_EQ(s.angles()->theta, kPi / 2);
  EXPECT_EQ(ParseStrategy("U(0,1.5707963267948966)").label(), "U(0,1.57079633)");
  const auto list = ParseStrategyList("C, D,Q,U(3.141592653589793,0)");
  ASSERT_EQ(list.size(), 4u);
  EXPECT_EQ(list[3].label(), "U(3.14159265,0)");
  EXPECT_THROW(ParseStrategy("Z"), Error);
  EXPECT_THROW(ParseStrategy("1,2,3"), Error);
  EXPECT_THROW(ParseStrategy("a,b"), Error);
  EXPECT_THROW(ParseStrategyList("C,,D"), Error);
  EXPECT_THROW(ParseStrategyList("U(1,0"), Error);
}

TEST(EntanglerTest, ClosedForm) {
  EXPECT_LE(MaxAbsDiff(BuildEntangler(0.0), ComplexMatrix::Identity(4)), 0.0);
  const double s = 1.0 / std::sqrt(2.0);
  const ComplexMatrix expected = ComplexMatrix{1, 0, 0, kI,   //
                                               0, 1, -kI, 0,  //
                                               0, -kI, 1, 0,  //
                                               kI, 0, 0, 1}
                                     .Scaled(s);
  EXPECT_LE(MaxAbsDiff(BuildEntangler(kPi / 2), expected), 1e-15);
  EXPECT_THROW(BuildEntangler(-0.1), Error);
  EXPECT_THROW(BuildEntangler(2.0), Error);
}

TEST(EntanglerTest, MatchesSeriesExponential) {
  const ComplexMatrix flip{0.0, 1.0, -1.0, 0.0};
  const auto ff = Tensor(flip, flip);
  for (double gamma : {0.0, 0.3, 0.7, 1.0, kPi / 2}) {
    const auto series = MatExpSeries(ff.Scaled(kI * (gamma / 2)), 1e-13);
    const auto j = BuildEntangler(gamma);
    EXPECT_LE(MaxAbsDiff(j, series), 1e-10) << "gamma=" << gamma;
    EXPECT_TRUE(IsUnitary(j, 1e-12));
  }
}

TEST(FinalStateTest, Examples) {
  const auto c = StrategyUnitary::C();
  const auto d = StrategyUnitary::D();
  const auto q = StrategyUnitary::Q();
  for (double gamma : {0.0, 0.4, kPi / 2}) {
    EXPECT_LE(MaxAbsDiff(FinalState(c, c, {gamma}), ComplexVector::Basis(4, 0)), 1e-15);
  }
  EXPECT_LE(MaxAbsDiff(FinalState(c, d, kMax), ComplexVector{0.0, -1.0, 0.0, 0.0}), 1e-15);
  EXPECT_LE(MaxAbsDiff(FinalState(q, q, kMax), ComplexVector{-1.0, 0.0, 0.0, 0.0}), 1e-15);
}

TEST(FinalStateTest, AgreesWithReferenceSimulator) {
  std::mt19937_64 rng(2718);
  std::uniform_real_distribution<double> theta(0.0, kPi);
  std::uniform_real_distribution<double> phi(0.0, kPi / 2);
  std::uniform_real_distribution<double> gamma(0.0, kPi / 2);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = StrategyUnitary::FromAngles(theta(rng), phi(rng));
    const auto b = StrategyUnitary::FromAngles(theta(rng), phi(rng));
    const double g = gamma(rng);
    const auto psi = FinalState(a, b, {g});
    const auto ref = oracle::FinalState(ToGate(a), ToGate(b), g);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_LE(std::abs(psi[k] - ref[k]), 1e-12);
  }
}

TEST(FinalStateTest, UnitNormOnRandomProfiles) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> theta(0.0, kPi);
  std::uniform_real_distribution<double> phi(0.0, kPi / 2);
  std::uniform_real_distribution<double> gamma(0.0, kPi / 2);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = StrategyUnitary::FromAngles(theta(rng), phi(rng));
    const auto b = StrategyUnitary::FromAngles(theta(rng), phi(rng));
    const QuantizationConfig cfg{gamma(rng)};
    EXPECT_NEAR(Norm(FinalState(a, b, cfg)), 1.0, 1e-12);
    const auto dist = ComputeOutcomeDistribution(a, b, cfg);
    EXPECT_NEAR(dist.p[0] + dist.p[1] + dist.p[2] + dist.p[3], 1.0, 1e-12);
  }
}

TEST(OutcomeDistributionTest, Examples) {
  const auto c = StrategyUnitary::C();
  const auto d = StrategyUnitary::D();
  const auto q = StrategyUnitary::Q();
  ExpectPointMass(ComputeOutcomeDistribution(c, c, kMax), 0);
  ExpectPointMass(ComputeOutcomeDistribution(d, q, kMax), 1);
  ExpectPointMass(ComputeOutcomeDistribution(c, q, kMax), 3);
  // Reference values from the statevector oracle: (1/2, 0, 1/2, 0).
  const auto half = ComputeOutcomeDistribution(StrategyUnitary::FromAngles(kPi / 2, 0), c, kMax);
  EXPECT_NEAR(half.p[0], 0.5, 1e-12);
  EXPECT_NEAR(half.p[1], 0.0, 1e-12);
  EXPECT_NEAR(half.p[2], 0.5, 1e-12);
  EXPECT_NEAR(half.p[3], 0.0, 1e-12);
}

TEST(OutcomeDistributionTest, GlobalPhaseInvariance) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> theta(0.0, kPi);
  std::uniform_real_distribution<double> phi(0.0, kPi / 2);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = StrategyUnitary::FromAngles(theta(rng), phi(rng));
    const auto b = StrategyUnitary::FromAngles(theta(rng), phi(rng));
    const auto a2 = StrategyUnitary::FromMatrix("a", a.matrix().Scaled(std::polar(1.0, angle(rng))));
    const auto b2 = StrategyUnitary::FromMatrix("b", b.matrix().Scaled(std::polar(1.0, angle(rng))));
    const QuantizationConfig cfg{trial % 2 ? kPi / 2 : 0.8};
    const auto d1 = ComputeOutcomeDistribution(a, b, cfg);
    const auto d2 = ComputeOutcomeDistribution(a2, b2, cfg);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(d1.p[k], d2.p[k], 1e-12);
  }
}

TEST(ExpectedPayoffsTest, Examples) {
  const auto pd = Pd();
  const auto c = StrategyUnitary::C();
  const auto d = StrategyUnitary::D();
  const auto q = StrategyUnitary::Q();
  ExpectPayoff(ExpectedPayoffs(pd, c, d, kMax), 0, 5);
  ExpectPayoff(ExpectedPayoffs(pd, q, d, kMax), 5, 0);
  ExpectPayoff(ExpectedPayoffs(pd, q, q, kMax), 3, 3);
  // Q flips the other player's classical choice.
  ExpectPayoff(ExpectedPayoffs(pd, q, c, kMax), 1, 1);
  EXPECT_THROW(ExpectedPayoffs(LoadGame(std::string(QGAME_FIXTURE_DIR) + "/pd_extended.game"),
                               c, c, kMax),
               Error);
}

TEST(ExtendedMatrixTest, ReproducesExtendedPayoutMatrix) {
  const auto ext = ExtendedMatrix(Pd(), {StrategyUnitary::C(), StrategyUnitary::D(),
                                         StrategyUnitary::Q()},
                                  kMax);
  const auto golden = LoadGame(std::string(QGAME_FIXTURE_DIR) + "/pd_extended.game");
  EXPECT_TRUE(ApproxEqual(ext, golden, 1e-9)) << SerializeGame(ext);
  EXPECT_EQ(SerializeGame(ext), SerializeGame(golden));
}

TEST(ExtendedMatrixTest, ClassicalSubgameIsGammaInvariant) {
  const auto pd = Pd();
  for (double gamma : {0.0, 0.25, 0.5, 1.0, kPi / 2}) {
    const auto ext = ExtendedMatrix(pd, {StrategyUnitary::C(), StrategyUnitary::D()}, {gamma});
    EXPECT_TRUE(ApproxEqual(ext, pd, 1e-9)) << "gamma=" << gamma;
  }
}

TEST(ExtendedMatrixTest, SingleStrategyAndErrors) {
  const auto one = ExtendedMatrix(Pd(), {StrategyUnitary::C()}, kMax);
  ASSERT_EQ(one.num_rows(), 1u);
  ExpectPayoff(one.payoff(0, 0), 3, 3);
  EXPECT_THROW(ExtendedMatrix(Pd(), {StrategyUnitary::C(), StrategyUnitary::C()}, kMax), Error);
  EXPECT_THROW(ExtendedMatrix(Pd(), {}, kMax), Error);
  EXPECT_THROW(ExtendedMatrix(Pd(), {StrategyUnitary::C()}, {3.0}), Error);
}

TEST(ExtendedMatrixTest, SymmetricForPrisonersDilemma) {
  const std::vector<StrategyUnitary> s = {StrategyUnitary::C(), StrategyUnitary::D(),
                                          StrategyUnitary::Q(),
                                          StrategyUnitary::FromAngles(1.1, 0.3)};
  for (double gamma : {0.0, 0.6, kPi / 2}) {
    const auto ext = ExtendedMatrix(Pd(), s, {gamma});
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b)
        EXPECT_NEAR(ext.payoff(a, b).row, ext.payoff(b, a).col, 1e-9);
  }
}

TEST(ExtendedMatrixTest, EquilibriumShift) {
  const auto ext = ExtendedMatrix(Pd(), {StrategyUnitary::C(), StrategyUnitary::D(),
                                         StrategyUnitary::Q()},
                                  kMax);
  const auto r = PureNash(ext, kPayoffTol);
  EXPECT_EQ(r.strict_nash, (std::vector<Profile>{{2, 2}}));
  EXPECT_EQ(r.weak_nash, (std::vector<Profile>{{2, 2}}));
  EXPECT_EQ(PureNash(Pd()).strict_nash, (std::vector<Profile>{{1, 1}}));
}

TEST(BestResponseScanTest, AgainstQ) {
  const auto r = BestResponseScan(Pd(), StrategyUnitary::Q(), kMax, {101, 51});
  EXPECT_NEAR(r.max_payoff, 3.0, 1e-9);
  ASSERT_EQ(r.argmax_points.size(), 1u);
  EXPECT_EQ(r.argmax_points[0].theta_index, 0u);
  EXPECT_EQ(r.argmax_points[0].phi_index, 50u);
  EXPECT_DOUBLE_EQ(r.argmax_points[0].phi, kPi / 2);
}

TEST(BestResponseScanTest, AgainstD) {
  const auto r = BestResponseScan(Pd(), StrategyUnitary::D(), kMax, {101, 51});
  EXPECT_NEAR(r.max_payoff, 5.0, 1e-9);
  ASSERT_EQ(r.argmax_points.size(), 1u);
  EXPECT_EQ(r.argmax_points[0].theta_index, 0u);
  EXPECT_EQ(r.argmax_points[0].phi_index, 50u);
}

TEST(BestResponseScanTest, ClassicalLimit) {
  const auto r = BestResponseScan(Pd(), StrategyUnitary::D(), kClassical, {101, 51});
  EXPECT_NEAR(r.max_payoff, 1.0, 1e-9);
  // theta = pi is D for every phi.
  ASSERT_EQ(r.argmax_points.size(), 51u);
  for (std::size_t j = 0; j < 51; ++j) {
    EXPECT_EQ(r.argmax_points[j].theta_index, 100u);
    EXPECT_EQ(r.argmax_points[j].phi_index, j);
  }
}

TEST(BestResponseScanTest, IndependentOfThreadCount) {
  const auto opponent = StrategyUnitary::FromAngles(0.9, 0.4);
  const auto ref = BestResponseScan(Pd(), opponent, {1.1}, {41, 21}, 1);
  for (unsigned threads : {2u, 3u, 7u, 0u}) {
    const auto r = BestResponseScan(Pd(), opponent, {1.1}, {41, 21}, threads);
    EXPECT_EQ(r.max_payoff, ref.max_payoff);
    ASSERT_EQ(r.argmax_points.size(), ref.argmax_points.size());
    for (std::size_t i = 0; i < r.argmax_points.size(); ++i) {
      EXPECT_EQ(r.argmax_points[i].theta_index, ref.argmax_points[i].theta_index);
      EXPECT_EQ(r.argmax_points[i].phi_index, ref.argmax_points[i].phi_index);
    }
  }
}

TEST(BestResponseScanTest, GridTooSmall) {
  EXPECT_THROW(BestResponseScan(Pd(), StrategyUnitary::Q(), kMax, {1, 1}), Error);
  EXPECT_THROW(BestResponseScan(Pd(), StrategyUnitary::Q(), kMax, {5, 1}), Error);
}

TEST(GridTest, OddGridsHitNamedMoves) {
  const GridSpec grid{5, 3};
  const auto q = GridPointAt(grid, 2);
  EXPECT_EQ(q.theta, 0.0);
  EXPECT_EQ(q.phi, kPi / 2);
  const auto d = GridPointAt(grid, 12);
  EXPECT_EQ(d.theta, kPi);
  EXPECT_EQ(d.phi, 0.0);
}

// Expected sets were frozen from an exhaustive evaluation of the 15x15 grid
// game with an independent numpy simulation.
TEST(GridEquilibriaTest, MaximalEntanglementOnlyQQ) {
  const auto eq = FindGridEquilibria(Pd(), kMax, {5, 3});
  ASSERT_EQ(eq.size(), 1u);
  EXPECT_EQ(eq[0].row.theta_index, 0u);
  EXPECT_EQ(eq[0].row.phi_index, 2u);
  EXPECT_EQ(eq[0].col.theta_index, 0u);
  EXPECT_EQ(eq[0].col.phi_index, 2u);
}

TEST(GridEquilibriaTest, ClassicalLimitKeepsDD) {
  const auto eq = FindGridEquilibria(Pd(), kClassical, {5, 3});
  ASSERT_EQ(eq.size(), 9u);
  for (const auto& p : eq) {
    EXPECT_EQ(p.row.theta_index, 4u);
    EXPECT_EQ(p.col.theta_index, 4u);
  }
  EXPECT_EQ(eq.front().row.phi_index, 0u);
  EXPECT_EQ(eq.front().col.phi_index, 0u);
  // (Q,Q) at gamma = 0 is not an equilibrium: switching to D earns 5.
  ExpectPayoff(ExpectedPayoffs(Pd(), StrategyUnitary::Q(), StrategyUnitary::Q(), kClassical), 3,
               3);
  ExpectPayoff(ExpectedPayoffs(Pd(), StrategyUnitary::D(), StrategyUnitary::Q(), kClassical), 5,
               0);
}

TEST(GridEquilibriaTest, AllEqualGameEverythingIsEquilibrium) {
  const auto g = LoadGame(std::string(QGAME_TEST_DATA_DIR) + "/all_equal.game");
  for (double gamma : {0.0, 0.9, kPi / 2}) {
    EXPECT_EQ(FindGridEquilibria(g, {gamma}, {5, 3}).size(), 15u * 15u);
  }
}

TEST(GridEquilibriaTest, IndependentOfThreadCount) {
  const auto ref = FindGridEquilibria(Pd(), {1.2}, {5, 3}, 1);
  const auto par = FindGridEquilibria(Pd(), {1.2}, {5, 3}, 4);
  ASSERT_EQ(ref.size(), par.size());
  for (std::size_t i = 0; i < ref.size(); ++i) {
    EXPECT_EQ(ref[i].row.theta_index, par[i].row.theta_index);
    EXPECT_EQ(ref[i].col.phi_index, par[i].col.phi_index);
  }
}

}  // namespace
}  // namespace qgame
