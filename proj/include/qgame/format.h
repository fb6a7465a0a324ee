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

#ifndef QGAME_FORMAT_H_
#define QGAME_FORMAT_H_

#include <string>

namespace qgame {

// Canonical real formatting: 9 significant digits, trailing zeros trimmed,
// magnitudes below 1e-12 printed as "0" (this also normalizes -0).
std::string FormatReal(double value);

// Fixed-point with `decimals` places and the same zero normalization.
std::string FormatFixed(double value, int decimals);

// Fixed-point with trailing zeros (and a bare trailing '.') trimmed.
std::string FormatFixedTrimmed(double value, int decimals);

}  // namespace qgame

#endif  // QGAME_FORMAT_H_
