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

#ifndef PRBOX_BOXES_H
#define PRBOX_BOXES_H

#include <array>
#include <optional>
#include <string_view>

#include "prbox/core.h"
#include "prbox/random.h"
#include "prbox/spacetime.h"

namespace prbox {

/**
 * The four mechanical PR-box circuits.
 *
 *  - Signaling: Bob's output is constant 0, Alice's is x AND y. One input
 *    bit travels Bob -> Alice; usable for signaling Bob -> Alice.
 *  - AsymmetricNonSignaling: Bob's side draws a random bit r, outputs it and
 *    sends it along with y; Alice outputs (x AND y) XOR r.
 *  - SymmetricImmediate: whoever measures first outputs a fresh random bit
 *    and forwards it with its input; the second side outputs
 *    (x AND y) XOR r. Both outputs are immediate.
 *  - EprAssisted: the random bit is replaced by a same-basis singlet
 *    measurement, so only the first side's input crosses over.
 */
enum class BoxVariant { Signaling, AsymmetricNonSignaling, SymmetricImmediate, EprAssisted };

inline constexpr std::array<BoxVariant, 4> kAllVariants = {
    BoxVariant::Signaling, BoxVariant::AsymmetricNonSignaling, BoxVariant::SymmetricImmediate,
    BoxVariant::EprAssisted};

std::string_view to_string(BoxVariant variant);
std::optional<BoxVariant> parse_box_variant(std::string_view name);

/// Whether the variant reacts to a measurement schedule. The first two
/// circuits are sequential devices: Bob acts, Alice waits.
constexpr bool takes_schedule(BoxVariant variant) {
    return variant == BoxVariant::SymmetricImmediate || variant == BoxVariant::EprAssisted;
}

/// Classical bits a non-degenerate trial of the variant exchanges internally.
int expected_bit_cost(BoxVariant variant);

inline constexpr double kDefaultDistance = 5.0;

/// Schedule the sequential boxes run on: both sides enter their input at
/// t = 0, Alice at x = 0 and Bob at x = distance. Alice's output waits for
/// Bob's bit.
TrialSchedule canonical_schedule(InputPair inputs, double distance = kDefaultDistance);

/// Which side inverts its EPR outcome before combining. `SecondMeasurer` is
/// the working device; `BobOnly` wires the negation to Bob's side
/// unconditionally and breaks the PR relation whenever Bob measures first.
enum class EprNegation { SecondMeasurer, BobOnly };

TrialResult run_signaling_box(InputPair inputs, RandomSource& rng, double distance = kDefaultDistance);
TrialResult run_asymmetric_box(InputPair inputs, RandomSource& rng, double distance = kDefaultDistance);
TrialResult run_symmetric_box(const TrialSchedule& schedule, RandomSource& rng);
TrialResult run_epr_box(const TrialSchedule& schedule, RandomSource& rng,
                        EprNegation negation = EprNegation::SecondMeasurer);

/// Dispatches on variant. Sequential variants use only the schedule's inputs
/// and separation.
TrialResult run_box(BoxVariant variant, const TrialSchedule& schedule, RandomSource& rng);

}  // namespace prbox

#endif  // PRBOX_BOXES_H
