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


#ifndef QGAME_TOOLS_COMMANDS_H_
#define QGAME_TOOLS_COMMANDS_H_

#include <cstdint>
#include <ostream>
#include <string>

namespace qgame_cli {

struct Options {
  std::string game_path;
  std::string gamma = "max";
  std::string strategies = "C,D,Q";
  std::string opponent;
  std::string grid = "101x51";
  std::string profile;
  std::string sample;
  bool grid_equilibria = false;
  unsigned threads = 0;
  double tol = 1e-9;
  std::uint64_t seed = 1;
  std::uint64_t trials = 100000;
};

// Each command writes its report to `out` and returns the exit code
// (0 success, 1 analysis failure). Usage problems throw UsageError.
int RunShow(const Options& opt, std::ostream& out);
int RunEquilibria(const Options& opt, std::ostream& out);
int RunDominance(const Options& opt, std::ostream& out);
int RunPareto(const Options& opt, std::ostream& out);
int RunQuantize(const Options& opt, std::ostream& out);
int RunScan(const Options& opt, std::ostream& out);
int RunModel(const Options& opt, std::ostream& out);
int RunReproduce(const Options& opt, std::ostream& out);

// "max" or a decimal radian value.
double ParseGamma(const std::string& text);

}  // namespace qgame_cli

#endif  // QGAME_TOOLS_COMMANDS_H_
