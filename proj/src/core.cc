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

#include "prbox/core.h"

namespace prbox {

std::string_view to_string(Side side) { return side == Side::Alice ? "alice" : "bob"; }

std::string_view to_string(PayloadKind kind) {
    switch (kind) {
        case PayloadKind::InputBit:
            return "input_bit";
        case PayloadKind::RandomBit:
            return "random_bit";
        case PayloadKind::EprClassicalBit:
            return "epr_classical_bit";
        case PayloadKind::Trigger:
            return "trigger";
    }
    return "unknown";
}

InternalMessage make_trigger(Side side, double time) {
    return InternalMessage{side, side, PayloadKind::Trigger, std::nullopt, 0, time, time};
}

InternalMessage make_transfer(Side from, PayloadKind kind, Bit payload, double emit_time,
                              double distance) {
    if (kind == PayloadKind::Trigger) {
        throw std::invalid_argument("make_transfer: triggers do not cross sides");
    }
    if (!(distance > 0.0)) {
        throw std::invalid_argument("make_transfer: sides must be separated");
    }
    return InternalMessage{from,       other(from),          kind, payload, bit_cost_of(kind),
                           emit_time, emit_time + distance};
}

}  // namespace prbox
