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

#include <numbers>

#include "gtest/gtest.h"

namespace qgame {
namespace {

TEST(FormatTest, RealUsesNineSignificantDigits) {
  EXPECT_EQ(FormatReal(3.0), "3");
  EXPECT_EQ(FormatReal(2.25), "2.25");
  EXPECT_EQ(FormatReal(-1.5), "-1.5");
  EXPECT_EQ(FormatReal(std::numbers::pi / 2), "1.57079633");
  EXPECT_EQ(FormatReal(4.999999999999999), "5");
  EXPECT_EQ(FormatReal(123456789012.0), "1.23456789e+11");
}

TEST(FormatTest, ZeroIsNormalized) {
  EXPECT_EQ(FormatReal(-0.0), "0");
  EXPECT_EQ(FormatReal(4.4e-16), "0");
  EXPECT_EQ(FormatReal(-3e-17), "0");
  EXPECT_EQ(FormatFixed(-0.0, 3), "0.000");
  EXPECT_EQ(FormatFixed(-1e-15, 9), "0.000000000");
}

TEST(FormatTest, Fixed) {
  EXPECT_EQ(FormatFixed(3.0, 9), "3.000000000");
  EXPECT_EQ(FormatFixedTrimmed(std::numbers::pi / 2, 9), "1.570796327");
  EXPECT_EQ(FormatFixedTrimmed(0.0, 9), "0");
  EXPECT_EQ(FormatFixedTrimmed(2.5, 9), "2.5");
}

}  // namespace
}  // namespace qgame
