// Copyright 2026 The prbox Authors
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

#include "prbox/random.h"

#include <gtest/gtest.h>

#include <cmath>

namespace prbox {
namespace {

TEST(SeededRandomSource, SameSeedSameStream) {
    SeededRandomSource first(7, 3);
    SeededRandomSource second(7, 3);
    for (int i = 0; i < 1000; ++i) {
        ASSERT_EQ(first.next_bit(), second.next_bit());
        ASSERT_EQ(first.next_unit(), second.next_unit());
    }
}

TEST(SeededRandomSource, SubstreamsDiffer) {
    EXPECT_NE(derive_stream_seed(7, 0), derive_stream_seed(7, 1));
    EXPECT_NE(derive_stream_seed(7, 0), derive_stream_seed(8, 0));
    SeededRandomSource a(7, 0);
    SeededRandomSource b(7, 1);
    int same = 0;
    for (int i = 0; i < 256; ++i) same += a.next_bit() == b.next_bit();
    EXPECT_LT(same, 256);
}

TEST(SeededRandomSource, BitFrequencyWithinFiveSigma) {
    constexpr int n = 200000;
    for (std::uint64_t seed : {0ULL, 1ULL, 42ULL}) {
        SeededRandomSource rng(seed);
        int ones = 0;
        for (int i = 0; i < n; ++i) ones += rng.next_bit().value();
        EXPECT_NEAR(static_cast<double>(ones) / n, 0.5, 5.0 * std::sqrt(0.25 / n)) << seed;
    }
}

TEST(SeededRandomSource, UnitsInRange) {
    SeededRandomSource rng(5);
    double sum = 0.0;
    constexpr int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.next_unit();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
    }
    EXPECT_NEAR(sum / n, 0.5, 5.0 * std::sqrt(1.0 / 12.0 / n));
}

TEST(ScriptedRandomSource, CyclesAndCounts) {
    ScriptedRandomSource rng({kOne, kZero}, {0.25});
    EXPECT_EQ(rng.next_bit(), kOne);
    EXPECT_EQ(rng.next_bit(), kZero);
    EXPECT_EQ(rng.next_bit(), kOne);
    EXPECT_EQ(rng.next_unit(), 0.25);
    EXPECT_EQ(rng.bits_drawn(), 3U);
    EXPECT_EQ(rng.units_drawn(), 1U);
    EXPECT_THROW(ScriptedRandomSource({}), std::invalid_argument);
    EXPECT_THROW(ScriptedRandomSource({kOne}, {1.0}), std::invalid_argument);
}

}  // namespace
}  // namespace prbox
