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

#include "prbox/boxes.h"

#include <algorithm>
#include <stdexcept>

#include "prbox/quantum.h"

namespace prbox {
namespace {

void sort_by_emit_time(std::vector<InternalMessage>& messages) {
    std::stable_sort(messages.begin(), messages.end(),
                     [](const InternalMessage& l, const InternalMessage& r) { return l.emit_time < r.emit_time; });
}

void set_output(TrialResult& result, Side side, Bit value, double time) {
    if (side == Side::Alice) {
        result.a = value;
        result.a_output_time = time;
    } else {
        result.b = value;
        result.b_output_time = time;
    }
}

TrialResult start_result(const TrialSchedule& schedule) {
    TrialResult result;
    result.inputs = schedule.inputs;
    result.alice_measure_time = schedule.alice_event.time;
    result.bob_measure_time = schedule.bob_event.time;
    return result;
}

// In the spacelike case there is no first side. Random draws go to the sides
// in order of position so that mirroring a schedule mirrors the outputs.
Side leftmost_side(const TrialSchedule& schedule) {
    return schedule.alice_event.position < schedule.bob_event.position ? Side::Alice : Side::Bob;
}

// Bob outputs `random_bit` (0 when absent) and sends y plus, when present, the
// random bit to Alice, who combines once everything has arrived.
TrialResult run_sequential(InputPair inputs, std::optional<Bit> random_bit, double distance) {
    const TrialSchedule schedule = canonical_schedule(inputs, distance);
    TrialResult result = start_result(schedule);
    const double bob_time = schedule.bob_event.time;

    result.messages.push_back(make_trigger(Side::Bob, bob_time));
    result.messages.push_back(make_transfer(Side::Bob, PayloadKind::InputBit, inputs.y, bob_time, distance));
    if (random_bit) {
        result.messages.push_back(
            make_transfer(Side::Bob, PayloadKind::RandomBit, *random_bit, bob_time, distance));
    }

    const Bit r = random_bit.value_or(kZero);
    double last_arrival = schedule.alice_event.time;
    for (const auto& m : result.messages) {
        if (m.to == Side::Alice) last_arrival = std::max(last_arrival, m.arrival_time);
    }
    set_output(result, Side::Bob, r, bob_time);
    set_output(result, Side::Alice, (inputs.x & inputs.y) ^ r, last_arrival);
    return result;
}

}  // namespace

std::string_view to_string(BoxVariant variant) {
    switch (variant) {
        case BoxVariant::Signaling:
            return "signaling";
        case BoxVariant::AsymmetricNonSignaling:
            return "asymmetric";
        case BoxVariant::SymmetricImmediate:
            return "symmetric";
        case BoxVariant::EprAssisted:
            return "epr";
    }
    return "unknown";
}

std::optional<BoxVariant> parse_box_variant(std::string_view name) {
    for (auto variant : kAllVariants) {
        if (to_string(variant) == name) return variant;
    }
    return std::nullopt;
}

int expected_bit_cost(BoxVariant variant) {
    switch (variant) {
        case BoxVariant::Signaling:
            return 1;
        case BoxVariant::AsymmetricNonSignaling:
        case BoxVariant::SymmetricImmediate:
            return 2;
        case BoxVariant::EprAssisted:
            return 1;
    }
    return 0;
}

TrialSchedule canonical_schedule(InputPair inputs, double distance) {
    return TrialSchedule{{0.0, 0.0}, {0.0, distance}, inputs};
}

TrialResult run_signaling_box(InputPair inputs, RandomSource& /*rng*/, double distance) {
    return run_sequential(inputs, std::nullopt, distance);
}

TrialResult run_asymmetric_box(InputPair inputs, RandomSource& rng, double distance) {
    return run_sequential(inputs, rng.next_bit(), distance);
}

TrialResult run_symmetric_box(const TrialSchedule& schedule, RandomSource& rng) {
    const FirstMeasurer verdict = first_measurer(schedule);
    TrialResult result = start_result(schedule);
    const double tA = schedule.alice_event.time;
    const double tB = schedule.bob_event.time;

    if (verdict == FirstMeasurer::Ambiguous) {
        // Both STORE gates believe their side came first and fire their RNGs.
        result.degenerate = true;
        const Side left = leftmost_side(schedule);
        const Bit r_left = rng.next_bit();
        const Bit r_right = rng.next_bit();
        set_output(result, left, r_left, schedule.event_of(left).time);
        set_output(result, other(left), r_right, schedule.event_of(other(left)).time);
        result.messages.push_back(make_trigger(Side::Alice, tA));
        result.messages.push_back(make_trigger(Side::Bob, tB));
        sort_by_emit_time(result.messages);
        return result;
    }

    const Side first = side_of(verdict);
    const Side second = other(first);
    const double t_first = schedule.event_of(first).time;
    const double t_second = schedule.event_of(second).time;
    const double distance = schedule.distance();

    const Bit r = rng.next_bit();
    result.messages.push_back(make_trigger(first, t_first));
    result.messages.push_back(
        make_transfer(first, PayloadKind::InputBit, schedule.inputs.of(first), t_first, distance));
    result.messages.push_back(make_transfer(first, PayloadKind::RandomBit, r, t_first, distance));
    sort_by_emit_time(result.messages);

    set_output(result, first, r, t_first);
    set_output(result, second, (schedule.inputs.x & schedule.inputs.y) ^ r, t_second);
    return result;
}

TrialResult run_epr_box(const TrialSchedule& schedule, RandomSource& rng, EprNegation negation) {
    const FirstMeasurer verdict = first_measurer(schedule);
    TrialResult result = start_result(schedule);
    const MeasurementBasis basis{0.0};
    const SingletOutcome pair = sample_singlet(basis, basis, rng);
    result.messages.push_back(make_trigger(Side::Alice, schedule.alice_event.time));
    result.messages.push_back(make_trigger(Side::Bob, schedule.bob_event.time));

    if (verdict == FirstMeasurer::Ambiguous) {
        // Each side outputs its raw outcome; the pair stays anti-correlated.
        result.degenerate = true;
        const Side left = leftmost_side(schedule);
        set_output(result, left, outcome_to_bit(pair.alice), schedule.event_of(left).time);
        set_output(result, other(left), outcome_to_bit(pair.bob), schedule.event_of(other(left)).time);
        sort_by_emit_time(result.messages);
        return result;
    }

    const Side first = side_of(verdict);
    const Side second = other(first);
    const double t_first = schedule.event_of(first).time;
    const double t_second = schedule.event_of(second).time;
    const Bit r_first = outcome_to_bit(pair.alice);
    const Bit r_second = outcome_to_bit(pair.bob);

    result.messages.push_back(make_transfer(first, PayloadKind::InputBit, schedule.inputs.of(first), t_first,
                                            schedule.distance()));
    sort_by_emit_time(result.messages);

    const bool negate = negation == EprNegation::SecondMeasurer || second == Side::Bob;
    const Bit and_bit = schedule.inputs.x & schedule.inputs.y;
    set_output(result, first, r_first, t_first);
    set_output(result, second, and_bit ^ (negate ? !r_second : r_second), t_second);
    return result;
}

TrialResult run_box(BoxVariant variant, const TrialSchedule& schedule, RandomSource& rng) {
    switch (variant) {
        case BoxVariant::Signaling:
            return run_signaling_box(schedule.inputs, rng, schedule.distance());
        case BoxVariant::AsymmetricNonSignaling:
            return run_asymmetric_box(schedule.inputs, rng, schedule.distance());
        case BoxVariant::SymmetricImmediate:
            return run_symmetric_box(schedule, rng);
        case BoxVariant::EprAssisted:
            return run_epr_box(schedule, rng);
    }
    throw std::invalid_argument("run_box: unknown variant");
}

}  // namespace prbox
