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

#ifndef PRBOX_SPACETIME_H
#define PRBOX_SPACETIME_H

#include <string_view>

#include "prbox/core.h"

namespace prbox {

// 1+1 dimensional Minkowski space in units where c = 1. Light-cone
// comparisons are exact; a signal that arrives exactly at a measurement
// counts as having arrived.

struct SpacetimeEvent {
    double time = 0.0;
    double position = 0.0;

    friend constexpr bool operator==(const SpacetimeEvent&, const SpacetimeEvent&) = default;
};

/// When and where each side enters its input.
struct TrialSchedule {
    SpacetimeEvent alice_event;
    SpacetimeEvent bob_event;
    InputPair inputs;

    const SpacetimeEvent& event_of(Side side) const {
        return side == Side::Alice ? alice_event : bob_event;
    }
    double distance() const;
    /// Throws std::invalid_argument on non-finite coordinates or co-located sides.
    void validate() const;
    /// Alice and Bob swap events and inputs.
    TrialSchedule mirrored() const;

    friend bool operator==(const TrialSchedule&, const TrialSchedule&) = default;
};

enum class CausalRelation { TimelikePast, TimelikeFuture, Lightlike, Spacelike };

enum class FirstMeasurer { AliceFirst, BobFirst, Ambiguous };

std::string_view to_string(CausalRelation relation);
std::string_view to_string(FirstMeasurer verdict);

/// Relation of e2 as seen from e1: TimelikePast means e1 causally precedes e2.
/// Coincident events are reported Lightlike.
CausalRelation causal_relation(const SpacetimeEvent& e1, const SpacetimeEvent& e2);

/// Arrival time at target_position of a light-speed signal emitted at source.
double signal_arrival_time(const SpacetimeEvent& source, double target_position);

FirstMeasurer first_measurer(const TrialSchedule& schedule);

/// Side of a determinate verdict. Throws std::logic_error for Ambiguous.
Side side_of(FirstMeasurer verdict);

}  // namespace prbox

#endif  // PRBOX_SPACETIME_H
