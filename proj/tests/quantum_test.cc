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

#include "prbox/quantum.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace prbox {
namespace {

using std::numbers::pi;

// Closed-form singlet correlator, kept independent of the sampler.
double singlet_correlation(double angle_a, double angle_b) { return -std::cos(angle_a - angle_b); }

double sampled_product_mean(double angle_a, double angle_b, int n, std::uint64_t seed) {
    SeededRandomSource rng(seed);
    long long sum = 0;
    for (int i = 0; i < n; ++i) {
        const auto o = sample_singlet({angle_a}, {angle_b}, rng);
        sum += o.alice * o.bob;
    }
    return static_cast<double>(sum) / n;
}

TEST(SampleSinglet, SameBasisAlwaysAntiCorrelated) {
    SeededRandomSource rng(11);
    for (double angle : {0.0, 0.7, -2.0, 2.0 * pi}) {
        for (int i = 0; i < 20000; ++i) {
            const auto o = sample_singlet({angle}, {angle}, rng);
            ASSERT_EQ(o.alice, -o.bob);
        }
    }
}

TEST(SampleSinglet, OppositeBasisAlwaysEqual) {
    SeededRandomSource rng(12);
    for (int i = 0; i < 20000; ++i) {
        const auto o = sample_singlet({pi}, {0.0}, rng);
        ASSERT_EQ(o.alice, o.bob);
    }
}

TEST(SampleSinglet, ProductMeanMatchesClosedForm) {
    constexpr int n = 100000;
    const double tol = 5.0 * std::sqrt(1.0 / n);
    for (double delta : {pi / 2.0, pi / 3.0, pi / 4.0, 2.0}) {
        EXPECT_NEAR(sampled_product_mean(delta, 0.0, n, 21), singlet_correlation(delta, 0.0), tol) << delta;
    }
}

TEST(SampleSinglet, MarginalsUniformForAnyAngle) {
    constexpr int n = 100000;
    const double tol = 5.0 * std::sqrt(0.25 / n);
    for (double delta : {0.0, pi / 3.0, pi / 2.0, pi}) {
        SeededRandomSource rng(31);
        int alice_up = 0;
        int bob_up = 0;
        for (int i = 0; i < n; ++i) {
            const auto o = sample_singlet({delta}, {0.0}, rng);
            alice_up += o.alice == 1;
            bob_up += o.bob == 1;
        }
        EXPECT_NEAR(static_cast<double>(alice_up) / n, 0.5, tol) << delta;
        EXPECT_NEAR(static_cast<double>(bob_up) / n, 0.5, tol) << delta;
    }
}

TEST(SampleSinglet, ConsumesOneBitAndOneUnit) {
    ScriptedRandomSource rng({kOne}, {0.9});
    const auto o = sample_singlet({0.0}, {0.0}, rng);
    EXPECT_EQ(o.alice, 1);
    EXPECT_EQ(o.bob, -1);
    EXPECT_EQ(rng.bits_drawn(), 1U);
    EXPECT_EQ(rng.units_drawn(), 1U);
}

TEST(OutcomeToBit, MapsSigns) {
    EXPECT_EQ(outcome_to_bit(1), kOne);
    EXPECT_EQ(outcome_to_bit(-1), kZero);
    EXPECT_THROW(outcome_to_bit(0), std::invalid_argument);
    EXPECT_THROW(outcome_to_bit(2), std::invalid_argument);
}

TEST(QuantumChsh, StandardAnglesReachTsirelsonMagnitude) {
    const auto angles = standard_chsh_angles();
    double oracle = 0.0;
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            oracle += (x == 1 && y == 1 ? -1.0 : 1.0) * singlet_correlation(angles.alice[x], angles.bob[y]);
        }
    }
    // The singlet's anti-correlation makes the +,+,+,- combination negative.
    EXPECT_NEAR(oracle, -2.0 * std::numbers::sqrt2, 1e-12);

    const auto result = estimate_quantum_chsh(angles, 200000, 5);
    EXPECT_NEAR(result.value, oracle, 0.02);
    EXPECT_NEAR(std::abs(result.value), 2.0 * std::numbers::sqrt2, 0.02);
}

TEST(QuantumChsh, EqualAnglesGiveMinusTwo) {
    const auto result = estimate_quantum_chsh({{0.4, 0.4}, {0.4, 0.4}}, 1000, 1);
    for (const auto& row : result.correlators) {
        for (double e : row) EXPECT_EQ(e, -1.0);
    }
    EXPECT_EQ(result.value, -2.0);
}

TEST(QuantumChsh, SingleSampleStaysInRange) {
    const auto result = estimate_quantum_chsh(standard_chsh_angles(), 1, 9);
    EXPECT_GE(result.value, -4.0);
    EXPECT_LE(result.value, 4.0);
    EXPECT_THROW(estimate_quantum_chsh(standard_chsh_angles(), 0, 9), std::invalid_argument);
}

TEST(QuantumChsh, Deterministic) {
    const auto a = estimate_quantum_chsh(standard_chsh_angles(), 5000, 77);
    const auto b = estimate_quantum_chsh(standard_chsh_angles(), 5000, 77);
    EXPECT_EQ(a.value, b.value);
}

}  // namespace
}  // namespace prbox
