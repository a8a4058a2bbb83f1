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

#ifndef PRBOX_ANALYSIS_H
#define PRBOX_ANALYSIS_H

#include <array>
#include <cstdint>
#include <span>

#include "prbox/core.h"

namespace prbox {

/// Empirical counts over (x, y, a, b). Counts only ever grow through add()
/// and merge(), so each input pair's (a, b) counts sum to its trial count.
class JointDistribution {
   public:
    void add(InputPair inputs, Bit a, Bit b, std::uint64_t times = 1);
    void add(const TrialResult& result) { add(result.inputs, result.a, result.b); }
    /// Count merging is associative and commutative.
    JointDistribution& merge(const JointDistribution& other);

    std::uint64_t count(InputPair inputs, Bit a, Bit b) const { return counts_[index(inputs, a, b)]; }
    std::uint64_t trials(InputPair inputs) const { return trials_[input_index(inputs)]; }
    std::uint64_t total_trials() const;

    /// P(a, b | x, y). Throws std::invalid_argument if (x, y) has no trials.
    double probability(InputPair inputs, Bit a, Bit b) const;
    /// P(output of `side` = value | x, y).
    double marginal(Side side, Bit value, InputPair inputs) const;
    /// P(a = b | x, y) - P(a != b | x, y).
    double correlator(InputPair inputs) const;

    /// Throws std::invalid_argument naming the first input pair with no trials.
    void require_all_inputs(const char* what) const;

    friend bool operator==(const JointDistribution&, const JointDistribution&) = default;

   private:
    static constexpr int input_index(InputPair in) { return 2 * in.x.value() + in.y.value(); }
    static constexpr int index(InputPair in, Bit a, Bit b) {
        return 4 * input_index(in) + 2 * a.value() + b.value();
    }

    std::array<std::uint64_t, 16> counts_{};
    std::array<std::uint64_t, 4> trials_{};
};

struct NonSignalingReport {
    /// max over (a, x) of |P(a | x, y=0) - P(a | x, y=1)|.
    double delta_alice = 0.0;
    /// max over (b, y) of |P(b | x=0, y) - P(b | x=1, y)|.
    double delta_bob = 0.0;
    double threshold = 0.0;
    std::uint64_t min_trials_per_input = 0;
    bool passes = false;
};

struct BitAccountingReport {
    std::uint64_t trials = 0;
    std::uint64_t non_degenerate_trials = 0;
    std::uint64_t alice_to_bob_bits = 0;
    std::uint64_t bob_to_alice_bits = 0;
    std::uint64_t total_bits = 0;
    std::uint64_t trigger_count = 0;
    double mean_alice_to_bob = 0.0;
    double mean_bob_to_alice = 0.0;
    double mean_bits_per_trial = 0.0;
    /// Mean over non-degenerate trials only; 0 when there are none.
    double mean_bits_per_non_degenerate_trial = 0.0;
};

/// Throws std::invalid_argument on empty input.
JointDistribution estimate_distribution(std::span<const TrialResult> results);

/// Fraction of trials with a XOR b = x AND y. Throws on empty input.
double pr_compliance(std::span<const TrialResult> results);

/// Fraction of trials flagged degenerate. Throws on empty input.
double degenerate_fraction(std::span<const TrialResult> results);

/// Marginal-selectivity check. threshold = z * sqrt(0.5 / N_min).
NonSignalingReport nonsignaling_test(const JointDistribution& dist, double z = 4.0);

/// E(0,0) + E(0,1) + E(1,0) - E(1,1).
double chsh_value(const JointDistribution& dist);

/// Plug-in mutual information, in bits, of a 2x2 contingency table
/// counts[i][j] = #(first = i, second = j).
double mutual_information_bits(const std::array<std::array<std::uint64_t, 2>, 2>& counts);

/// I(input of `sender`; output of `receiver`) in bits, plug-in estimate.
double channel_mutual_information(std::span<const TrialResult> results, Side sender, Side receiver);

BitAccountingReport bit_accounting(std::span<const TrialResult> results);

}  // namespace prbox

#endif  // PRBOX_ANALYSIS_H
