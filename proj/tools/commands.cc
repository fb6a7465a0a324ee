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


#include "commands.h"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>
#include <vector>

#include "handles.h"

namespace qgame_cli {
namespace {

constexpr double kPayoffTol = 1e-9;

// Splits "a,b" at the top-level comma, so "U(1,0),C" stays two items.
std::pair<std::string, std::string> SplitPair(const std::string& text, const char* what) {
  int depth = 0;
  std::vector<size_t> commas;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ',' && depth == 0) commas.push_back(i);
  }
  if (commas.size() != 1 || commas[0] == 0 || commas[0] + 1 == text.size()) {
    throw UsageError(std::string("malformed ") + what + " '" + text + "' (expected ROW,COL)");
  }
  return {text.substr(0, commas[0]), text.substr(commas[0] + 1)};
}

size_t ParseCount(const std::string& text, const std::string& whole) {
  size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("malformed grid '" + whole + "' (expected THETAxPHI, e.g. 101x51)");
  }
  return value;
}

std::pair<size_t, size_t> ParseGrid(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos) {
    throw UsageError("malformed grid '" + text + "' (expected THETAxPHI, e.g. 101x51)");
  }
  return {ParseCount(text.substr(0, x), text), ParseCount(text.substr(x + 1), text)};
}

size_t FindLabel(const qg_game* g, qg_player p, const std::string& label) {
  for (size_t i = 0; i < qg_game_num_moves(g, p); ++i) {
    if (Label(g, p, i) == label) return i;
  }
  throw UsageError("unknown move '" + label + "' for " + PlayerName(g, p));
}

std::string JoinProfiles(const qg_game* g, const std::vector<qg_profile>& ps) {
  if (ps.empty()) return "none";
  std::string s;
  for (size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ProfileName(g, ps[i]);
  return s;
}

std::string GridPointText(const qg_grid_point& p) {
  return "(theta=" + Fixed(p.theta, 9, true) + ", phi=" + Fixed(p.phi, 9, true) + ")";
}

bool SameProfiles(const std::vector<qg_profile>& a, const std::vector<qg_profile>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].row != b[i].row || a[i].col != b[i].col) return false;
  }
  return true;
}

void WriteEquilibria(const qg_game* g, double tol, std::ostream& out) {
  const NashSets nash = PureNash(g, tol);
  out << "strict Nash: " << JoinProfiles(g, nash.strict_nash) << '\n';
  out << "weak Nash: " << JoinProfiles(g, nash.weak_nash) << '\n';
  const long r = Dominant(g, QG_PLAYER_ROW, tol);
  const long c = Dominant(g, QG_PLAYER_COL, tol);
  if (r >= 0 && c >= 0) {
    out << "dominant-strategy profile: "
        << ProfileName(g, {static_cast<size_t>(r), static_cast<size_t>(c)}) << '\n';
  }
  if (nash.weak_nash.size() == 1) {
    out << "unique pure Nash equilibrium: " << ProfileName(g, nash.weak_nash[0]) << '\n';
  }
}

// The two reference matrices for the reproduction report, with the
// input's player names so only moves and payoffs are compared.
std::string ReferenceBase(const std::string& a, const std::string& b) {
  return "players: " + a + " " + b +
         "\nrows: C D\ncols: C D\npayoffs:\n"
         "C C 3 3\nC D 0 5\nD C 5 0\nD D 1 1\n";
}

std::string ReferenceExtended(const std::string& a, const std::string& b) {
  return "players: " + a + " " + b +
         "\nrows: C D Q\ncols: C D Q\npayoffs:\n"
         "C C 3 3\nC D 0 5\nC Q 1 1\n"
         "D C 5 0\nD D 1 1\nD Q 0 5\n"
         "Q C 1 1\nQ D 5 0\nQ Q 3 3\n";
}

bool ApproxEqual(const qg_game* a, const qg_game* b, double tol) {
  int equal = 0;
  Check(qg_game_approx_equal(a, b, tol, &equal));
  return equal != 0;
}

class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}

  std::ostream& Section(const std::string& title) {
    if (index_ > 0) out_ << '\n';
    out_ << '[' << ++index_ << "] " << title << '\n';
    return out_;
  }

  void Verdict(bool ok, const std::string& claim) {
    out_ << (ok ? "PASS " : "FAIL ") << claim << '\n';
    passed_ += ok ? 1 : 0;
  }

  int Finish() {
    out_ << "\nsummary: " << passed_ << '/' << index_ << " sections PASS\n";
    return passed_ == index_ ? 0 : 1;
  }

 private:
  std::ostream& out_;
  int index_ = 0;
  int passed_ = 0;
};

}  // namespace

double ParseGamma(const std::string& text) {
  if (text == "max") return std::numbers::pi / 2;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    throw UsageError("malformed gamma '" + text + "' (expected radians or 'max')");
  }
  return value;
}

int RunShow(const Options& opt, std::ostream& out) {
  out << Serialize(LoadGame(opt.game_path).get());
  return 0;
}

int RunEquilibria(const Options& opt, std::ostream& out) {
  const Game g = LoadGame(opt.game_path);
  WriteEquilibria(g.get(), 0.0, out);
  return 0;
}

int RunDominance(const Options& opt, std::ostream& out) {
  const Game g = LoadGame(opt.game_path);
  for (qg_player p : {QG_PLAYER_ROW, QG_PLAYER_COL}) {
    const long m = Dominant(g.get(), p, 0.0);
    out << PlayerName(g.get(), p) << " strictly dominant move: "
        << (m >= 0 ? Label(g.get(), p, static_cast<size_t>(m)) : "none") << '\n';
  }
  return 0;
}

int RunPareto(const Options& opt, std::ostream& out) {
  const Game g = LoadGame(opt.game_path);
  std::vector<qg_profile> targets;
  if (!opt.profile.empty()) {
    const auto [r, c] = SplitPair(opt.profile, "profile");
    targets.push_back({FindLabel(g.get(), QG_PLAYER_ROW, r), FindLabel(g.get(), QG_PLAYER_COL, c)});
  } else {
    for (size_t r = 0; r < qg_game_num_moves(g.get(), QG_PLAYER_ROW); ++r) {
      for (size_t c = 0; c < qg_game_num_moves(g.get(), QG_PLAYER_COL); ++c) {
        targets.push_back({r, c});
      }
    }
  }
  for (const auto& p : targets) {
    const auto dominators = ParetoDominators(g.get(), p, 0.0);
    out << ProfileName(g.get(), p)
        << (dominators.empty() ? " Pareto-optimal" : " dominated by " +
                                                         JoinProfiles(g.get(), dominators))
        << '\n';
  }
  return 0;
}

int RunQuantize(const Options& opt, std::ostream& out) {
  const double gamma = ParseGamma(opt.gamma);
  const Game base = LoadGame(opt.game_path);
  const StrategySet set = ParseStrategies(opt.strategies);
  out << Serialize(Extended(base.get(), set.get(), gamma).get());
  return 0;
}

int RunScan(const Options& opt, std::ostream& out) {
  const double gamma = ParseGamma(opt.gamma);
  const auto [ts, ps] = ParseGrid(opt.grid);
  const Game base = LoadGame(opt.game_path);

  if (opt.grid_equilibria) {
    if (!opt.opponent.empty()) throw UsageError("--opponent cannot be combined with --equilibria");
    size_t n = 0;
    Check(qg_find_grid_equilibria(base.get(), gamma, ts, ps, opt.threads, nullptr, &n));
    std::vector<qg_grid_profile> found(n);
    Check(qg_find_grid_equilibria(base.get(), gamma, ts, ps, opt.threads, found.data(), &n));
    out << "grid equilibria: " << found.size() << '\n';
    for (const auto& f : found) {
      out << GridPointText(f.row) << " vs " << GridPointText(f.col) << '\n';
    }
    return 0;
  }

  if (opt.opponent.empty()) throw UsageError("scan needs --opponent or --equilibria");
  double best = 0.0;
  size_t n = 0;
  Check(qg_best_response_scan(base.get(), opt.opponent.c_str(), gamma, ts, ps, opt.threads,
                              &best, nullptr, &n));
  std::vector<qg_grid_point> points(n);
  Check(qg_best_response_scan(base.get(), opt.opponent.c_str(), gamma, ts, ps, opt.threads,
                              &best, points.data(), &n));
  out << "max " << Fixed(best, 9, false) << " at ";
  for (size_t i = 0; i < points.size(); ++i) out << (i ? ", " : "") << GridPointText(points[i]);
  out << '\n';
  return 0;
}

int RunModel(const Options& opt, std::ostream& out) {
  const double gamma = ParseGamma(opt.gamma);
  const Game base = LoadGame(opt.game_path);
  const StrategySet set = ParseStrategies(opt.strategies);
  qg_model* raw = nullptr;
  Check(qg_model_build(base.get(), set.get(), gamma, &raw));
  const Model model(raw);

  qg_sample_report sample{};
  std::string sample_row, sample_col;
  if (!opt.sample.empty()) {
    std::tie(sample_row, sample_col) = SplitPair(opt.sample, "sample profile");
    Check(qg_model_sample(model.get(), sample_row.c_str(), sample_col.c_str(), opt.seed,
                          opt.trials, &sample));
  }

  int passed = 0;
  char* failures = nullptr;
  Check(qg_model_verify(model.get(), base.get(), gamma, opt.tol, &passed, &failures));
  const std::string failure_text = TakeString(failures);

  char* exported = nullptr;
  Check(qg_model_export(model.get(), &exported));
  out << TakeString(exported);
  if (!opt.sample.empty()) {
    out << "sample (" << sample_row << ',' << sample_col << ") seed " << opt.seed << " trials "
        << sample.trials << ": " << sample.counts[0] << ' ' << sample.counts[1] << ' '
        << sample.counts[2] << ' ' << sample.counts[3] << " l1 " << Real(sample.l1_distance)
        << '\n';
  }
  out << failure_text;
  out << "verification: " << (passed ? "PASS" : "FAIL") << '\n';
  return passed ? 0 : 1;
}

int RunReproduce(const Options& opt, std::ostream& out) {
  const Game base = LoadGame(opt.game_path);
  const qg_game* g = base.get();
  if (qg_game_num_moves(g, QG_PLAYER_ROW) != 2 || qg_game_num_moves(g, QG_PLAYER_COL) != 2) {
    throw UsageError("quantization base game must be 2×2");
  }
  const double gamma = std::numbers::pi / 2;
  const std::string alice = PlayerName(g, QG_PLAYER_ROW);
  const std::string bob = PlayerName(g, QG_PLAYER_COL);
  const StrategySet cdq = ParseStrategies("C,D,Q");
  const Game extended = Extended(g, cdq.get(), gamma);
  const qg_game* e = extended.get();
  Report report(out);

  report.Section("Base game") << Serialize(g);
  report.Verdict(ApproxEqual(g, ParseGame(ReferenceBase(alice, bob)).get(), 0.0),
                 "input is the Prisoner's Dilemma payout matrix");

  {
    auto& s = report.Section("Classical analysis");
    const NashSets nash = PureNash(g, 0.0);
    s << "strict Nash: " << JoinProfiles(g, nash.strict_nash) << '\n';
    s << "weak Nash: " << JoinProfiles(g, nash.weak_nash) << '\n';
    const long r = Dominant(g, QG_PLAYER_ROW, 0.0);
    const long c = Dominant(g, QG_PLAYER_COL, 0.0);
    s << alice << " dominant move: " << (r >= 0 ? Label(g, QG_PLAYER_ROW, r) : "none") << '\n';
    s << bob << " dominant move: " << (c >= 0 ? Label(g, QG_PLAYER_COL, c) : "none") << '\n';
    bool ok = nash.strict_nash.size() == 1 && nash.weak_nash.size() == 1 && r >= 0 && c >= 0 &&
              nash.strict_nash[0].row == static_cast<size_t>(r) &&
              nash.strict_nash[0].col == static_cast<size_t>(c);
    if (ok) {
      const qg_profile eq = nash.strict_nash[0];
      const auto dominators = ParetoDominators(g, eq, 0.0);
      s << ProfileName(g, eq) << " Pareto-dominated by: " << JoinProfiles(g, dominators) << '\n';
      bool undominated_better = false;
      for (const auto& d : dominators) undominated_better |= ParetoDominators(g, d, 0.0).empty();
      ok = !dominators.empty() && undominated_better;
    }
    report.Verdict(ok,
                   "the unique strict Nash equilibrium is reached by dominant moves and is "
                   "Pareto-dominated by an undominated profile");
  }

  report.Section("Extended matrix (gamma=" + Real(gamma) + ", strategies C,D,Q)") << Serialize(e);
  report.Verdict(ApproxEqual(e, ParseGame(ReferenceExtended(alice, bob)).get(), kPayoffTol),
                 "extended matrix matches the reference C/D/Q matrix within 1e-09");

  {
    auto& s = report.Section("Extended-game equilibria");
    const NashSets nash = PureNash(e, kPayoffTol);
    s << "strict Nash: " << JoinProfiles(e, nash.strict_nash) << '\n';
    s << "weak Nash: " << JoinProfiles(e, nash.weak_nash) << '\n';
    const bool ok = nash.strict_nash.size() == 1 && SameProfiles(nash.strict_nash, nash.weak_nash) &&
                    ProfileName(e, nash.strict_nash[0]) == "(Q,Q)";
    report.Verdict(ok, "(Q,Q) is the only pure Nash equilibrium");
  }

  {
    report.Section("Classical subgame");
    qg_game* raw = nullptr;
    Check(qg_game_restrict(e, "C,D", "C,D", &raw));
    const Game sub(raw);
    report.Verdict(ApproxEqual(sub.get(), g, kPayoffTol),
                   "restricting the extended matrix to {C,D} reproduces the base game");
  }

  {
    auto& s = report.Section("Unilateral deviations from (D,D)");
    const size_t d = 1, q = 2;
    bool ok = true;
    for (qg_player p : {QG_PLAYER_ROW, QG_PLAYER_COL}) {
      s << PlayerName(e, p) << ':';
      double at_d = 0.0, at_q = 0.0;
      for (size_t m = 0; m < 3; ++m) {
        double pr = 0.0, pc = 0.0;
        if (p == QG_PLAYER_ROW) {
          Check(qg_game_payoff(e, m, d, &pr, &pc));
        } else {
          Check(qg_game_payoff(e, d, m, &pr, &pc));
        }
        const double mine = p == QG_PLAYER_ROW ? pr : pc;
        s << ' ' << Label(e, p, m) << " -> " << Real(mine) << (m < 2 ? "," : "");
        if (m == d) at_d = mine;
        if (m == q) at_q = mine;
      }
      s << '\n';
      ok = ok && at_q > at_d + kPayoffTol;
    }
    report.Verdict(ok, "each player gains by switching unilaterally from D to Q");
  }

  {
    auto& s = report.Section("Classical model");
    qg_model* raw = nullptr;
    Check(qg_model_build(g, cdq.get(), gamma, &raw));
    const Model model(raw);
    int passed = 0;
    char* failures = nullptr;
    Check(qg_model_verify(model.get(), g, gamma, kPayoffTol, &passed, &failures));
    s << TakeString(failures);
    qg_game* payoff_raw = nullptr;
    Check(qg_model_payoff_game(model.get(), &payoff_raw));
    const Game payoff_game(payoff_raw);
    const bool same_nash = SameProfiles(PureNash(payoff_game.get(), kPayoffTol).weak_nash,
                                        PureNash(e, kPayoffTol).weak_nash);
    report.Verdict(passed != 0 && same_nash,
                   "the mediated classical table reproduces every payoff and equilibrium");
  }

  return report.Finish();
}

}  // namespace qgame_cli
