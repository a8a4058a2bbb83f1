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

#ifndef PRBOX_CORE_H
#define PRBOX_CORE_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace prbox {

/// A classical bit. Stored as the integer 0 or 1 so that the box relations
/// read as ordinary mod-2 arithmetic.
class Bit {
   public:
    constexpr Bit() = default;
    constexpr explicit Bit(int value) : value_(static_cast<std::uint8_t>(value)) {
        if (value != 0 && value != 1) {
            throw std::invalid_argument("Bit value must be 0 or 1, got " + std::to_string(value));
        }
    }

    constexpr int value() const { return value_; }

    friend constexpr Bit operator^(Bit lhs, Bit rhs) { return Bit(lhs.value_ ^ rhs.value_); }
    friend constexpr Bit operator&(Bit lhs, Bit rhs) { return Bit(lhs.value_ & rhs.value_); }
    friend constexpr Bit operator!(Bit bit) { return Bit(1 - bit.value_); }
    friend constexpr bool operator==(Bit, Bit) = default;

   private:
    std::uint8_t value_ = 0;
};

inline constexpr Bit kZero{0};
inline constexpr Bit kOne{1};

enum class Side : std::uint8_t { Alice, Bob };

constexpr Side other(Side side) { return side == Side::Alice ? Side::Bob : Side::Alice; }
std::string_view to_string(Side side);

/// Alice's input x and Bob's input y.
struct InputPair {
    Bit x;
    Bit y;

    /// Input of the given side.
    constexpr Bit of(Side side) const { return side == Side::Alice ? x : y; }
    friend constexpr bool operator==(const InputPair&, const InputPair&) = default;
};

/// The four input pairs in (0,0), (0,1), (1,0), (1,1) order.
inline constexpr InputPair kAllInputPairs[4] = {
    {kZero, kZero}, {kZero, kOne}, {kOne, kZero}, {kOne, kOne}};

enum class PayloadKind : std::uint8_t { InputBit, RandomBit, EprClassicalBit, Trigger };

std::string_view to_string(PayloadKind kind);

/// Classical bits a message of this kind carries: one for data, zero for triggers.
constexpr int bit_cost_of(PayloadKind kind) { return kind == PayloadKind::Trigger ? 0 : 1; }

/// A transmission inside a box. Triggers stay on one side and carry no bits;
/// everything else crosses between the sides at light speed.
struct InternalMessage {
    Side from = Side::Alice;
    Side to = Side::Alice;
    PayloadKind kind = PayloadKind::Trigger;
    std::optional<Bit> payload;
    int bit_cost = 0;
    double emit_time = 0.0;
    double arrival_time = 0.0;

    friend bool operator==(const InternalMessage&, const InternalMessage&) = default;
};

InternalMessage make_trigger(Side side, double time);
InternalMessage make_transfer(Side from, PayloadKind kind, Bit payload, double emit_time,
                              double distance);

/// Everything one run of a box produces.
struct TrialResult {
    InputPair inputs;
    Bit a;
    Bit b;
    double alice_measure_time = 0.0;
    double bob_measure_time = 0.0;
    double a_output_time = 0.0;
    double b_output_time = 0.0;
    std::vector<InternalMessage> messages;
    /// Both sides acted as first measurer (measurements mutually spacelike).
    bool degenerate = false;

    Bit output(Side side) const { return side == Side::Alice ? a : b; }
    friend bool operator==(const TrialResult&, const TrialResult&) = default;
};

/// True iff a XOR b equals x AND y.
constexpr bool pr_satisfied(InputPair inputs, Bit a, Bit b) {
    return (a ^ b) == (inputs.x & inputs.y);
}

}  // namespace prbox

#endif  // PRBOX_CORE_H
