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

#include "prbox/spacetime.h"

#include <cmath>
#include <stdexcept>

namespace prbox {

double TrialSchedule::distance() const { return std::abs(bob_event.position - alice_event.position); }

void TrialSchedule::validate() const {
    for (const auto* event : {&alice_event, &bob_event}) {
        if (!std::isfinite(event->time) || !std::isfinite(event->position)) {
            throw std::invalid_argument("schedule coordinates must be finite");
        }
    }
    if (alice_event.position == bob_event.position) {
        throw std::invalid_argument("Alice and Bob must be at different positions");
    }
}

TrialSchedule TrialSchedule::mirrored() const {
    return TrialSchedule{bob_event, alice_event, InputPair{inputs.y, inputs.x}};
}

std::string_view to_string(CausalRelation relation) {
    switch (relation) {
        case CausalRelation::TimelikePast:
            return "timelike_past";
        case CausalRelation::TimelikeFuture:
            return "timelike_future";
        case CausalRelation::Lightlike:
            return "lightlike";
        case CausalRelation::Spacelike:
            return "spacelike";
    }
    return "unknown";
}

std::string_view to_string(FirstMeasurer verdict) {
    switch (verdict) {
        case FirstMeasurer::AliceFirst:
            return "alice_first";
        case FirstMeasurer::BobFirst:
            return "bob_first";
        case FirstMeasurer::Ambiguous:
            return "ambiguous";
    }
    return "unknown";
}

CausalRelation causal_relation(const SpacetimeEvent& e1, const SpacetimeEvent& e2) {
    const double dt = e2.time - e1.time;
    const double dx = std::abs(e2.position - e1.position);
    if (dt > dx) return CausalRelation::TimelikePast;
    if (dt < -dx) return CausalRelation::TimelikeFuture;
    if (std::abs(dt) == dx) return CausalRelation::Lightlike;
    return CausalRelation::Spacelike;
}

double signal_arrival_time(const SpacetimeEvent& source, double target_position) {
    return source.time + std::abs(target_position - source.position);
}

FirstMeasurer first_measurer(const TrialSchedule& schedule) {
    schedule.validate();
    const auto& alice = schedule.alice_event;
    const auto& bob = schedule.bob_event;
    // Closed light cone: arrival exactly at the measurement counts.
    const bool bob_informed = signal_arrival_time(alice, bob.position) <= bob.time;
    const bool alice_informed = signal_arrival_time(bob, alice.position) <= alice.time;
    if (bob_informed && !alice_informed) return FirstMeasurer::AliceFirst;
    if (alice_informed && !bob_informed) return FirstMeasurer::BobFirst;
    if (!alice_informed && !bob_informed) return FirstMeasurer::Ambiguous;
    throw std::logic_error("both sides informed; positions cannot coincide");
}

Side side_of(FirstMeasurer verdict) {
    switch (verdict) {
        case FirstMeasurer::AliceFirst:
            return Side::Alice;
        case FirstMeasurer::BobFirst:
            return Side::Bob;
        case FirstMeasurer::Ambiguous:
            break;
    }
    throw std::logic_error("side_of: ambiguous ordering has no first side");
}

}  // namespace prbox
