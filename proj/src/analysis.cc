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

#include "prbox/analysis.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace prbox {
namespace {

std::string describe(InputPair inputs) {
    return "(x=" + std::to_string(inputs.x.value()) + ",y=" + std::to_string(inputs.y.value()) + ")";
}

void require_non_empty(std::span<const TrialResult> results, const char* what) {
    if (results.empty()) throw std::invalid_argument(std::string(what) + ": no trial results");
}

}  // namespace

void JointDistribution::add(InputPair inputs, Bit a, Bit b, std::uint64_t times) {
    counts_[index(inputs, a, b)] += times;
    trials_[input_index(inputs)] += times;
}

JointDistribution& JointDistribution::merge(const JointDistribution& other) {
    for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
    for (std::size_t i = 0; i < trials_.size(); ++i) trials_[i] += other.trials_[i];
    return *this;
}

std::uint64_t JointDistribution::total_trials() const {
    return std::accumulate(trials_.begin(), trials_.end(), std::uint64_t{0});
}

double JointDistribution::probability(InputPair inputs, Bit a, Bit b) const {
    const auto n = trials(inputs);
    if (n == 0) throw std::invalid_argument("no trials for input pair " + describe(inputs));
    return static_cast<double>(count(inputs, a, b)) / static_cast<double>(n);
}

double JointDistribution::marginal(Side side, Bit value, InputPair inputs) const {
    return side == Side::Alice ? probability(inputs, value, kZero) + probability(inputs, value, kOne)
                               : probability(inputs, kZero, value) + probability(inputs, kOne, value);
}

double JointDistribution::correlator(InputPair inputs) const {
    const double equal = probability(inputs, kZero, kZero) + probability(inputs, kOne, kOne);
    const double differ = probability(inputs, kZero, kOne) + probability(inputs, kOne, kZero);
    return equal - differ;
}

void JointDistribution::require_all_inputs(const char* what) const {
    for (auto inputs : kAllInputPairs) {
        if (trials(inputs) == 0) {
            throw std::invalid_argument(std::string(what) + ": missing input pair " + describe(inputs));
        }
    }
}

JointDistribution estimate_distribution(std::span<const TrialResult> results) {
    require_non_empty(results, "estimate_distribution");
    JointDistribution dist;
    for (const auto& r : results) dist.add(r);
    return dist;
}

double pr_compliance(std::span<const TrialResult> results) {
    require_non_empty(results, "pr_compliance");
    const auto ok = std::count_if(results.begin(), results.end(),
                                  [](const TrialResult& r) { return pr_satisfied(r.inputs, r.a, r.b); });
    return static_cast<double>(ok) / static_cast<double>(results.size());
}

double degenerate_fraction(std::span<const TrialResult> results) {
    require_non_empty(results, "degenerate_fraction");
    const auto n = std::count_if(results.begin(), results.end(), [](const TrialResult& r) { return r.degenerate; });
    return static_cast<double>(n) / static_cast<double>(results.size());
}

NonSignalingReport nonsignaling_test(const JointDistribution& dist, double z) {
    dist.require_all_inputs("nonsignaling_test");
    NonSignalingReport report;
    for (auto value : {kZero, kOne}) {
        for (auto own : {kZero, kOne}) {
            // Alice's marginal at fixed x under both y, and Bob's at fixed y under both x.
            const double alice_gap = std::abs(dist.marginal(Side::Alice, value, {own, kZero}) -
                                              dist.marginal(Side::Alice, value, {own, kOne}));
            const double bob_gap = std::abs(dist.marginal(Side::Bob, value, {kZero, own}) -
                                            dist.marginal(Side::Bob, value, {kOne, own}));
            report.delta_alice = std::max(report.delta_alice, alice_gap);
            report.delta_bob = std::max(report.delta_bob, bob_gap);
        }
    }
    std::uint64_t n_min = dist.trials(kAllInputPairs[0]);
    for (auto inputs : kAllInputPairs) n_min = std::min(n_min, dist.trials(inputs));
    report.min_trials_per_input = n_min;
    report.threshold = z * std::sqrt(0.5 / static_cast<double>(n_min));
    report.passes = report.delta_alice <= report.threshold && report.delta_bob <= report.threshold;
    return report;
}

double chsh_value(const JointDistribution& dist) {
    dist.require_all_inputs("chsh_value");
    return dist.correlator({kZero, kZero}) + dist.correlator({kZero, kOne}) + dist.correlator({kOne, kZero}) -
           dist.correlator({kOne, kOne});
}

double mutual_information_bits(const std::array<std::array<std::uint64_t, 2>, 2>& counts) {
    const double n = static_cast<double>(counts[0][0] + counts[0][1] + counts[1][0] + counts[1][1]);
    if (n == 0.0) throw std::invalid_argument("mutual_information_bits: empty table");
    double info = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            if (counts[i][j] == 0) continue;
            const double row = static_cast<double>(counts[i][0] + counts[i][1]);
            const double col = static_cast<double>(counts[0][j] + counts[1][j]);
            const double joint = static_cast<double>(counts[i][j]);
            info += joint / n * std::log2(joint * n / (row * col));
        }
    }
    // Rounding can leave a tiny negative value for independent tables.
    return std::max(info, 0.0);
}

double channel_mutual_information(std::span<const TrialResult> results, Side sender, Side receiver) {
    require_non_empty(results, "channel_mutual_information");
    std::array<std::array<std::uint64_t, 2>, 2> table{};
    for (const auto& r : results) ++table[r.inputs.of(sender).value()][r.output(receiver).value()];
    return mutual_information_bits(table);
}

BitAccountingReport bit_accounting(std::span<const TrialResult> results) {
    BitAccountingReport report;
    std::uint64_t non_degenerate_bits = 0;
    for (const auto& r : results) {
        ++report.trials;
        std::uint64_t trial_bits = 0;
        for (const auto& m : r.messages) {
            if (m.kind == PayloadKind::Trigger) {
                ++report.trigger_count;
                continue;
            }
            const auto cost = static_cast<std::uint64_t>(m.bit_cost);
            (m.from == Side::Alice ? report.alice_to_bob_bits : report.bob_to_alice_bits) += cost;
            trial_bits += cost;
        }
        report.total_bits += trial_bits;
        if (!r.degenerate) {
            ++report.non_degenerate_trials;
            non_degenerate_bits += trial_bits;
        }
    }
    if (report.trials > 0) {
        const auto n = static_cast<double>(report.trials);
        report.mean_alice_to_bob = static_cast<double>(report.alice_to_bob_bits) / n;
        report.mean_bob_to_alice = static_cast<double>(report.bob_to_alice_bits) / n;
        report.mean_bits_per_trial = static_cast<double>(report.total_bits) / n;
    }
    if (report.non_degenerate_trials > 0) {
        report.mean_bits_per_non_degenerate_trial =
            static_cast<double>(non_degenerate_bits) / static_cast<double>(report.non_degenerate_trials);
    }
    return report;
}

}  // namespace prbox
