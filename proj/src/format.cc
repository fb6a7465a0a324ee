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

#include "qgame/format.h"

#include <cmath>
#include <cstdio>

namespace qgame {
namespace {

constexpr double kZeroSnap = 1e-12;

double Snap(double value) { return std::fabs(value) < kZeroSnap ? 0.0 : value; }

void TrimFraction(std::string& s) {
  const auto dot = s.find('.');
  if (dot == std::string::npos) return;
  const auto exp = s.find_first_of("eE", dot);
  std::string mantissa = s.substr(0, exp);
  const std::string exponent = exp == std::string::npos ? "" : s.substr(exp);
  while (!mantissa.empty() && mantissa.back() == '0') mantissa.pop_back();
  if (!mantissa.empty() && mantissa.back() == '.') mantissa.pop_back();
  s = mantissa + exponent;
}

}  // namespace

std::string FormatReal(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", Snap(value));
  std::string s(buf);
  TrimFraction(s);
  if (s == "-0") s = "0";
  return s;
}

std::string FormatFixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, Snap(value));
  std::string s(buf);
  // Rounding can still produce "-0.000...".
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string FormatFixedTrimmed(double value, int decimals) {
  std::string s = FormatFixed(value, decimals);
  TrimFraction(s);
  return s;
}

}  // namespace qgame
