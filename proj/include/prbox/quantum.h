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

#ifndef PRBOX_QUANTUM_H
#define PRBOX_QUANTUM_H

#include <array>
#include <cstddef>
#include <cstdint>

#include "prbox/core.h"
#include "prbox/random.h"

namespace prbox {

// Singlet-state measurement statistics, sampled classically. The sampler
// reproduces the outcome distribution only; it is not a state-vector
// simulation, and a classical device can only produce these correlations
// because the sampler sees both bases at once. The EPR box does not charge
// that shared information as message bits, matching what the box counts.

struct MeasurementBasis {
    double angle = 0.0;  // radians; only differences modulo 2*pi matter
};

struct SingletOutcome {
    int alice = 1;  // +1 or -1
    int bob = -1;

    friend constexpr bool operator==(const SingletOutcome&, const SingletOutcome&) = default;
};

/// Draws one joint outcome. Alice's result is a uniform sign; Bob's equals it
/// with probability (1 - cos(delta)) / 2, delta = angle_a - angle_b. Consumes
/// exactly one bit and one unit from rng.
SingletOutcome sample_singlet(MeasurementBasis basis_a, MeasurementBasis basis_b, RandomSource& rng);

/// +1 -> 1, -1 -> 0; anything else throws std::invalid_argument.
Bit outcome_to_bit(int outcome);

/// Angles for a CHSH experiment: Alice picks alice[x], Bob picks bob[y].
struct ChshAngles {
    std::array<double, 2> alice{};
    std::array<double, 2> bob{};
};

ChshAngles standard_chsh_angles();

struct QuantumChshResult {
    /// Product expectations indexed [x][y].
    std::array<std::array<double, 2>, 2> correlators{};
    /// E00 + E01 + E10 - E11.
    double value = 0.0;
    std::uint64_t trials_per_setting = 0;
};

/// Samples each of the four setting pairs `trials_per_setting` times. Setting
/// (x, y) uses its own substream 2x+y of `seed`.
QuantumChshResult estimate_quantum_chsh(const ChshAngles& angles, std::uint64_t trials_per_setting,
                                        std::uint64_t seed);

}  // namespace prbox

#endif  // PRBOX_QUANTUM_H
