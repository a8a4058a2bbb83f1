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

#include "prbox/core.h"

#include <gtest/gtest.h>

namespace prbox {
namespace {

TEST(PrSatisfied, Examples) {
    EXPECT_TRUE(pr_satisfied({kZero, kOne}, kOne, kOne));
    EXPECT_TRUE(pr_satisfied({kOne, kOne}, kOne, kZero));
    EXPECT_FALSE(pr_satisfied({kZero, kZero}, kZero, kOne));
}

TEST(PrSatisfied, MatchesIntegerArithmeticOnAllSixteenCases) {
    int satisfied = 0;
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            int per_input = 0;
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    const bool expected = (a + b) % 2 == (x * y) % 2;
                    EXPECT_EQ(pr_satisfied({Bit(x), Bit(y)}, Bit(a), Bit(b)), expected)
                        << x << y << a << b;
                    per_input += expected;
                }
            }
            EXPECT_EQ(per_input, 2);
            satisfied += per_input;
        }
    }
    EXPECT_EQ(satisfied, 8);
}

TEST(Bit, ClosedUnderXorAndAnd) {
    for (int l = 0; l < 2; ++l) {
        for (int r = 0; r < 2; ++r) {
            EXPECT_EQ((Bit(l) ^ Bit(r)).value(), l ^ r);
            EXPECT_EQ((Bit(l) & Bit(r)).value(), l & r);
        }
        EXPECT_EQ((!Bit(l)).value(), 1 - l);
    }
}

TEST(Bit, RejectsOutOfRange) {
    EXPECT_THROW(Bit(2), std::invalid_argument);
    EXPECT_THROW(Bit(-1), std::invalid_argument);
}

TEST(Side, OtherIsAnInvolution) {
    EXPECT_EQ(other(Side::Alice), Side::Bob);
    EXPECT_EQ(other(Side::Bob), Side::Alice);
    EXPECT_EQ(other(other(Side::Alice)), Side::Alice);
}

TEST(InternalMessage, CostsAndTiming) {
    const auto trigger = make_trigger(Side::Bob, 3.0);
    EXPECT_EQ(trigger.bit_cost, 0);
    EXPECT_EQ(trigger.from, trigger.to);
    EXPECT_EQ(trigger.arrival_time, trigger.emit_time);

    for (auto kind : {PayloadKind::InputBit, PayloadKind::RandomBit, PayloadKind::EprClassicalBit}) {
        const auto m = make_transfer(Side::Alice, kind, kOne, 2.0, 5.0);
        EXPECT_EQ(m.bit_cost, 1);
        EXPECT_EQ(m.to, Side::Bob);
        EXPECT_DOUBLE_EQ(m.arrival_time - m.emit_time, 5.0);
    }
    EXPECT_THROW(make_transfer(Side::Alice, PayloadKind::Trigger, kOne, 0.0, 1.0), std::invalid_argument);
    EXPECT_THROW(make_transfer(Side::Alice, PayloadKind::InputBit, kOne, 0.0, 0.0), std::invalid_argument);
}

}  // namespace
}  // namespace prbox
