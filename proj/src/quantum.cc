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

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace prbox {

SingletOutcome sample_singlet(MeasurementBasis basis_a, MeasurementBasis basis_b, RandomSource& rng) {
    const double delta = basis_a.angle - basis_b.angle;
    const double p_equal = (1.0 - std::cos(delta)) / 2.0;
    const int alice = rng.next_bit() == kOne ? 1 : -1;
    const bool equal = rng.next_unit() < p_equal;
    return SingletOutcome{alice, equal ? alice : -alice};
}

Bit outcome_to_bit(int outcome) {
    if (outcome == 1) return kOne;
    if (outcome == -1) return kZero;
    throw std::invalid_argument("measurement outcome must be +1 or -1, got " + std::to_string(outcome));
}

ChshAngles standard_chsh_angles() {
    using std::numbers::pi;
    return ChshAngles{{0.0, pi / 2.0}, {pi / 4.0, -pi / 4.0}};
}

QuantumChshResult estimate_quantum_chsh(const ChshAngles& angles, std::uint64_t trials_per_setting,
                                        std::uint64_t seed) {
    if (trials_per_setting == 0) {
        throw std::invalid_argument("estimate_quantum_chsh: trials must be positive");
    }
    QuantumChshResult result;
    result.trials_per_setting = trials_per_setting;
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            SeededRandomSource rng(seed, static_cast<std::uint64_t>(2 * x + y));
            const MeasurementBasis basis_a{angles.alice[x]};
            const MeasurementBasis basis_b{angles.bob[y]};
            std::int64_t product_sum = 0;
            for (std::uint64_t i = 0; i < trials_per_setting; ++i) {
                const auto outcome = sample_singlet(basis_a, basis_b, rng);
                product_sum += outcome.alice * outcome.bob;
            }
            result.correlators[x][y] =
                static_cast<double>(product_sum) / static_cast<double>(trials_per_setting);
        }
    }
    const auto& e = result.correlators;
    result.value = e[0][0] + e[0][1] + e[1][0] - e[1][1];
    return result;
}

}  // namespace prbox
