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
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "qgame/error.h"

namespace qgame {
namespace {

const std::string kDataDir = QGAME_TEST_DATA_DIR;
const std::string kFixtureDir = QGAME_FIXTURE_DIR;

BimatrixGame Pd() { return LoadGame(kFixtureDir + "/pd.game"); }
BimatrixGame PdExtended() { return LoadGame(kFixtureDir + "/pd_extended.game"); }
BimatrixGame AllEqual() { return LoadGame(kDataDir + "/all_equal.game"); }

std::vector<Profile> AllProfiles(const BimatrixGame& g) {
  std::vector<Profile> out;
  for (std::size_t r = 0; r < g.num_rows(); ++r)
    for (std::size_t c = 0; c < g.num_cols(); ++c) out.push_back({r, c});
  return out;
}

BimatrixGame RandomIntegerGame(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> d(0, 9);
  std::vector<std::string> rl;
  std::vector<std::string> cl;
  for (std::size_t i = 0; i < rows; ++i) rl.push_back("r" + std::to_string(i));
  for (std::size_t j = 0; j < cols; ++j) cl.push_back("c" + std::to_string(j));
  std::vector<PayoffPair> p;
  for (std::size_t k = 0; k < rows * cols; ++k) p.push_back({double(d(rng)), double(d(rng))});
  return BimatrixGame("R", "C", rl, cl, p);
}

TEST(ParseGameTest, CanonicalPrisonersDilemma) {
  const auto g = Pd();
  EXPECT_EQ(g.row_player(), "Alice");
  EXPECT_EQ(g.col_player(), "Bob");
  ASSERT_EQ(g.num_rows(), 2u);
  ASSERT_EQ(g.num_cols(), 2u);
  EXPECT_EQ(g.payoff(0, 0), (PayoffPair{3, 3}));
  EXPECT_EQ(g.payoff(0, 1), (PayoffPair{0, 5}));
  EXPECT_EQ(g.payoff(1, 0), (PayoffPair{5, 0}));
  EXPECT_EQ(g.payoff(1, 1), (PayoffPair{1, 1}));
}

TEST(ParseGameTest, ExtendedGame) {
  const auto g = PdExtended();
  ASSERT_EQ(g.num_rows(), 3u);
  EXPECT_EQ(g.row_moves(), (std::vector<std::string>{"C", "D", "Q"}));
  const PayoffPair expected[3][3] = {
      {{3, 3}, {0, 5}, {1, 1}}, {{5, 0}, {1, 1}, {0, 5}}, {{1, 1}, {5, 0}, {3, 3}}};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) EXPECT_EQ(g.payoff(r, c), expected[r][c]);
}

TEST(ParseGameTest, CellsInAnyOrder) {
  const auto g = AllEqual();
  for (const auto& p : AllProfiles(g)) EXPECT_EQ(g.payoff(p), (PayoffPair{2, 2}));
}

TEST(ParseGameTest, MissingCellNamesThePair) {
  try {
    LoadGame(kDataDir + "/pd_missing_cell.game");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("(D,D)"), std::string::npos) << e.what();
  }
}

TEST(ParseGameTest, ErrorsCarryLineNumbers) {
  const std::string bad_payoff =
      "players: A B\nrows: x\n\n# comment\ncols: y\npayoffs:\nx y 1 abc\n";
  try {
    ParseGame(bad_payoff);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 7);
  }
  const std::string duplicate_cell = "players: A B\nrows: x\ncols: y\npayoffs:\nx y 1 1\nx y 2 2\n";
  try {
    ParseGame(duplicate_cell);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 6);
    EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos);
  }
  try {
    ParseGame("players: A B\nrows: x x\ncols: y\npayoffs:\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(ParseGame("rows: x\n"), ParseError);
  EXPECT_THROW(ParseGame("players: A\nrows: x\ncols: y\npayoffs:\nx y 1 1\n"), ParseError);
  EXPECT_THROW(ParseGame("players: A B\nrows: x\ncols: y\npayoffs:\nx z 1 1\n"), ParseError);
  EXPECT_THROW(ParseGame("players: A B\nrows: x\ncols: y\npayoffs:\nx y 1\n"), ParseError);
  EXPECT_THROW(ParseGame("players: A B\nrows: x\ncols: y\npayoffs:\nx y 1 inf\n"), ParseError);
  EXPECT_THROW(ParseGame(""), ParseError);
}

TEST(ParseGameTest, MissingFileIsIoError) {
  try {
    LoadGame(kDataDir + "/does_not_exist.game");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

TEST(ParseGameTest, DecimalPayoffs) {
  const auto g = ParseGame("players: A B\nrows: x\ncols: y\npayoffs:\nx y -1.25 +2e-3 # note\n");
  EXPECT_EQ(g.payoff(0, 0), (PayoffPair{-1.25, 0.002}));
}

TEST(SerializeGameTest, RoundTripsThroughParser) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-100.0, 100.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<PayoffPair> p;
    for (int k = 0; k < 6; ++k) {
      // Values representable in 9 significant digits survive exactly.
      p.push_back({std::round(u(rng) * 1e4) / 1e4, std::round(u(rng) * 1e4) / 1e4});
    }
    const BimatrixGame g("P1", "P2", {"a", "b"}, {"x", "y", "z"}, p);
    EXPECT_EQ(ParseGame(SerializeGame(g)), g);
  }
}

TEST(SerializeGameTest, CanonicalText) {
  EXPECT_EQ(SerializeGame(Pd()),
            "players: Alice Bob\nrows: C D\ncols: C D\npayoffs:\n"
            "C C 3 3\nC D 0 5\nD C 5 0\nD D 1 1\n");
}

TEST(BimatrixGameTest, ConstructorValidates) {
  EXPECT_THROW(BimatrixGame("A", "B", {"x", "x"}, {"y"}, {{1, 1}, {1, 1}}), Error);
  EXPECT_THROW(BimatrixGame("A", "B", {"x"}, {"y"}, {{1, 1}, {1, 1}}), Error);
  EXPECT_THROW(BimatrixGame("A", "B", {"x y"}, {"y"}, {{1, 1}}), Error);
  EXPECT_THROW(BimatrixGame("A", "B", {}, {"y"}, {}), Error);
  EXPECT_THROW(BimatrixGame("A", "B", {"x"}, {"y"}, {{NAN, 1}}), Error);
}

TEST(PureNashTest, PrisonersDilemma) {
  const auto r = PureNash(Pd());
  EXPECT_EQ(r.strict_nash, (std::vector<Profile>{{1, 1}}));
  EXPECT_EQ(r.weak_nash, (std::vector<Profile>{{1, 1}}));
  ASSERT_TRUE(r.dominant_profile.has_value());
  EXPECT_EQ(*r.dominant_profile, (Profile{1, 1}));
}

TEST(PureNashTest, ExtendedGameHasOnlyQQ) {
  const auto r = PureNash(PdExtended());
  EXPECT_EQ(r.strict_nash, (std::vector<Profile>{{2, 2}}));
  EXPECT_EQ(r.weak_nash, (std::vector<Profile>{{2, 2}}));
  EXPECT_FALSE(r.dominant_profile.has_value());
}

TEST(PureNashTest, AllEqualGame) {
  const auto g = AllEqual();
  const auto r = PureNash(g);
  EXPECT_EQ(r.weak_nash, AllProfiles(g));
  EXPECT_TRUE(r.strict_nash.empty());
}

TEST(PureNashTest, ToleranceAbsorbsNoise) {
  const BimatrixGame noisy("A", "B", {"x", "y"}, {"u"}, {{1.0, 0.0}, {1.0 + 1e-13, 0.0}});
  EXPECT_EQ(PureNash(noisy).weak_nash.size(), 1u);
  EXPECT_EQ(PureNash(noisy, 1e-9).weak_nash.size(), 2u);
}

// A profile is weak Nash iff no single-index deviation strictly improves the
// deviator, checked against a direct scan on random 3x3 games.
TEST(PureNashTest, MatchesDeviationScanOnRandomGames) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 500; ++trial) {
    const auto g = RandomIntegerGame(rng, 3, 3);
    const auto r = PureNash(g);
    std::set<Profile> weak(r.weak_nash.begin(), r.weak_nash.end());
    for (const auto& p : AllProfiles(g)) {
      bool improvable = false;
      for (std::size_t alt = 0; alt < 3; ++alt) {
        if (g.payoff(alt, p.col).row > g.payoff(p).row) improvable = true;
        if (g.payoff(p.row, alt).col > g.payoff(p).col) improvable = true;
      }
      EXPECT_EQ(weak.count(p) == 1, !improvable);
    }
    EXPECT_TRUE(std::includes(r.weak_nash.begin(), r.weak_nash.end(), r.strict_nash.begin(),
                              r.strict_nash.end()));
    EXPECT_TRUE(std::is_sorted(r.weak_nash.begin(), r.weak_nash.end()));
    if (r.dominant_profile) {
      EXPECT_NE(std::find(r.strict_nash.begin(), r.strict_nash.end(), *r.dominant_profile),
                r.strict_nash.end());
    }
  }
}

TEST(PureNashTest, SymmetricGamesInvariantUnderTransposition) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> d(0, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 3;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("m" + std::to_string(i));
    std::vector<double> a(n * n);
    for (auto& x : a) x = d(rng);
    std::vector<PayoffPair> p;
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) p.push_back({a[s * n + t], a[t * n + s]});
    const BimatrixGame g("A", "B", labels, labels, p);
    const auto r = PureNash(g);
    const auto rt = PureNash(g.Transposed());
    auto swap = [](std::vector<Profile> v) {
      for (auto& x : v) std::swap(x.row, x.col);
      std::sort(v.begin(), v.end());
      return v;
    };
    EXPECT_EQ(swap(rt.weak_nash), r.weak_nash);
    EXPECT_EQ(swap(rt.strict_nash), r.strict_nash);
    EXPECT_EQ(r.weak_nash, swap(r.weak_nash));
  }
}

TEST(BestResponsesTest, Examples) {
  const auto pd = Pd();
  EXPECT_EQ(BestResponses(pd, Player::kRow, 0), (std::vector<std::size_t>{1}));
  EXPECT_EQ(BestResponses(pd, Player::kCol, 0), (std::vector<std::size_t>{1}));
  const auto ext = PdExtended();
  EXPECT_EQ(BestResponses(ext, Player::kRow, 2), (std::vector<std::size_t>{2}));
  EXPECT_EQ(ext.payoff(2, 2).row, 3.0);
  EXPECT_EQ(BestResponses(AllEqual(), Player::kRow, 1), (std::vector<std::size_t>{0, 1}));
  EXPECT_THROW(BestResponses(pd, Player::kRow, 2), Error);
}

TEST(StrictlyDominantTest, Examples) {
  const auto pd = Pd();
  EXPECT_EQ(StrictlyDominant(pd, Player::kRow), std::optional<std::size_t>(1));
  EXPECT_EQ(StrictlyDominant(pd, Player::kCol), std::optional<std::size_t>(1));
  EXPECT_FALSE(StrictlyDominant(PdExtended(), Player::kRow).has_value());
  EXPECT_FALSE(StrictlyDominant(PdExtended(), Player::kCol).has_value());
  EXPECT_FALSE(StrictlyDominant(AllEqual(), Player::kRow).has_value());
}

TEST(ParetoTest, Examples) {
  const auto pd = Pd();
  const auto dd = ParetoDominators(pd, {1, 1});
  EXPECT_NE(std::find(dd.begin(), dd.end(), Profile{0, 0}), dd.end());
  EXPECT_EQ(dd, (std::vector<Profile>{{0, 0}}));
  EXPECT_TRUE(ParetoDominators(pd, {0, 0}).empty());
  const BimatrixGame best("A", "B", {"x", "y"}, {"u"}, {{4, 4}, {1, 2}});
  EXPECT_TRUE(ParetoDominators(best, {0, 0}).empty());
  EXPECT_EQ(ParetoDominators(best, {1, 0}), (std::vector<Profile>{{0, 0}}));
  EXPECT_THROW(ParetoDominators(pd, {2, 0}), Error);
}

TEST(RestrictTest, ClassicalSubgameOfExtendedGame) {
  EXPECT_EQ(Restrict(PdExtended(), {"C", "D"}, {"C", "D"}), Pd());
  const auto pd = Pd();
  EXPECT_EQ(Restrict(pd, {"D", "C"}, {"C", "D"}), pd);
  const auto qq = Restrict(PdExtended(), {"Q"}, {"Q"});
  ASSERT_EQ(qq.num_rows(), 1u);
  EXPECT_EQ(qq.payoff(0, 0), (PayoffPair{3, 3}));
  EXPECT_THROW(Restrict(pd, {}, {"C"}), Error);
  EXPECT_THROW(Restrict(pd, {"X"}, {"C"}), Error);
}

TEST(RestrictTest, ComposesByIntersection) {
  const auto ext = PdExtended();
  const std::vector<std::vector<std::string>> subsets = {
      {"C", "D", "Q"}, {"C", "D"}, {"D", "Q"}, {"C", "Q"}, {"Q"}, {"D"}};
  for (const auto& r1 : subsets)
    for (const auto& r2 : subsets)
      for (const auto& c1 : subsets)
        for (const auto& c2 : subsets) {
          auto intersect = [](const auto& a, const auto& b) {
            std::vector<std::string> out;
            for (const auto& x : a)
              if (std::find(b.begin(), b.end(), x) != b.end()) out.push_back(x);
            return out;
          };
          const auto ri = intersect(r1, r2);
          const auto ci = intersect(c1, c2);
          if (ri.empty() || ci.empty()) continue;
          EXPECT_EQ(Restrict(Restrict(ext, r1, c1), ri, ci), Restrict(ext, ri, ci));
        }
}

TEST(CorrelatedPayoffTest, Examples) {
  const auto pd = Pd();
  EXPECT_EQ(CorrelatedPayoff(pd, JointDistribution::PointMass(2, 2, {0, 0})),
            (PayoffPair{3, 3}));
  EXPECT_EQ(CorrelatedPayoff(pd, JointDistribution(2, 2, {0.25, 0.25, 0.25, 0.25})),
            (PayoffPair{2.25, 2.25}));
  EXPECT_EQ(CorrelatedPayoff(pd, JointDistribution(2, 2, {0.0, 0.5, 0.5, 0.0})),
            (PayoffPair{2.5, 2.5}));
}

TEST(CorrelatedPayoffTest, PointMassEqualsProfilePayoff) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = RandomIntegerGame(rng, 3, 2);
    for (const auto& p : AllProfiles(g)) {
      EXPECT_EQ(CorrelatedPayoff(g, JointDistribution::PointMass(3, 2, p)), g.payoff(p));
    }
  }
}

TEST(CorrelatedPayoffTest, Errors) {
  EXPECT_THROW(JointDistribution(2, 2, {0.5, 0.5, 0.5, -0.5}), Error);
  EXPECT_THROW(JointDistribution(2, 2, {0.5, 0.5, 0.5, 0.0}), Error);
  EXPECT_THROW(JointDistribution(2, 2, {1.0}), Error);
  EXPECT_THROW(CorrelatedPayoff(Pd(), JointDistribution::PointMass(3, 3, {0, 0})), Error);
}

}  // namespace
}  // namespace qgame
