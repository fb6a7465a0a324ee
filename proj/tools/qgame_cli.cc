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


#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "commands.h"
#include "handles.h"

namespace {

using qgame_cli::Options;

CLI::App* AddCommand(CLI::App& app, const std::string& name, const std::string& help,
                     Options& opt) {
  CLI::App* sub = app.add_subcommand(name, help);
  sub->add_option("game", opt.game_path, "Game file")->required();
  return sub;
}

void AddGamma(CLI::App* sub, Options& opt) {
  sub->add_option("--gamma", opt.gamma, "Entanglement in radians, or 'max' for pi/2")
      ->capture_default_str();
}

void AddStrategies(CLI::App* sub, Options& opt) {
  sub->add_option("--strategies", opt.strategies, "Strategy list: C, D, Q or U(theta,phi)")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Classical and quantum analysis of two-player matrix games", "qgame"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(qg_version()));

  using Runner = std::function<int(const Options&, std::ostream&)>;
  std::map<CLI::App*, Runner> runners;

  runners[AddCommand(app, "show", "Print the game in canonical form", opt)] = qgame_cli::RunShow;
  runners[AddCommand(app, "equilibria", "List pure Nash equilibria", opt)] =
      qgame_cli::RunEquilibria;
  runners[AddCommand(app, "dominance", "Report strictly dominant moves", opt)] =
      qgame_cli::RunDominance;

  CLI::App* pareto = AddCommand(app, "pareto", "Pareto analysis of pure profiles", opt);
  pareto->add_option("--profile", opt.profile, "Single profile ROW,COL");
  runners[pareto] = qgame_cli::RunPareto;

  CLI::App* quantize = AddCommand(app, "quantize", "Print the quantized payoff matrix", opt);
  AddGamma(quantize, opt);
  AddStrategies(quantize, opt);
  runners[quantize] = qgame_cli::RunQuantize;

  CLI::App* scan = AddCommand(app, "scan", "Grid search over the strategy family", opt);
  scan->add_option("--opponent", opt.opponent, "Opponent strategy: C, D, Q or theta,phi");
  AddGamma(scan, opt);
  scan->add_option("--grid", opt.grid, "Grid size THETAxPHI")->capture_default_str();
  scan->add_flag("--equilibria", opt.grid_equilibria, "List pure equilibria on the grid");
  scan->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");
  runners[scan] = qgame_cli::RunScan;

  CLI::App* model = AddCommand(app, "model", "Build and verify the classical mediator model", opt);
  AddGamma(model, opt);
  AddStrategies(model, opt);
  model->add_option("--tol", opt.tol, "Verification tolerance")->capture_default_str();
  model->add_option("--sample", opt.sample, "Sample play of profile ROW,COL");
  model->add_option("--seed", opt.seed, "Sampling seed")->capture_default_str();
  model->add_option("--trials", opt.trials, "Sampling trials")->capture_default_str();
  runners[model] = qgame_cli::RunModel;

  runners[AddCommand(app, "reproduce", "Full Prisoner's Dilemma report", opt)] =
      qgame_cli::RunReproduce;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "qgame: " << e.what() << "\nRun with --help for usage.\n";
    return 2;
  }

  // Output is buffered so a failing command never leaves a partial table.
  std::ostringstream out;
  int code = 0;
  try {
    for (auto& [sub, run] : runners) {
      if (sub->parsed()) code = run(opt, out);
    }
  } catch (const qgame_cli::UsageError& e) {
    std::cerr << "qgame: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "qgame: internal error: " << e.what() << '\n';
    return 2;
  }
  std::cout << out.str();
  std::cout.flush();
  return std::cout ? code : 2;
}
