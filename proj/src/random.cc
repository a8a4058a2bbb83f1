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

#include "prbox/random.h"

#include <stdexcept>

namespace prbox {
namespace {

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

}  // namespace

std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t stream_index) {
    return mix64(mix64(master_seed + kGolden) ^ mix64((stream_index + 1) * kGolden));
}

SeededRandomSource::SeededRandomSource(std::uint64_t master_seed, std::uint64_t stream_index)
    : engine_(derive_stream_seed(master_seed, stream_index)) {}

Bit SeededRandomSource::next_bit() { return Bit(static_cast<int>(engine_() >> 63)); }

// 53 high bits; std::uniform_real_distribution is not bit-reproducible
// across standard library implementations.
double SeededRandomSource::next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

ScriptedRandomSource::ScriptedRandomSource(std::vector<Bit> bits, std::vector<double> units)
    : bits_(std::move(bits)), units_(std::move(units)) {
    if (bits_.empty() || units_.empty()) {
        throw std::invalid_argument("ScriptedRandomSource needs at least one bit and one unit");
    }
    for (double u : units_) {
        if (!(u >= 0.0 && u < 1.0)) throw std::invalid_argument("scripted units must lie in [0, 1)");
    }
}

Bit ScriptedRandomSource::next_bit() { return bits_[bits_drawn_++ % bits_.size()]; }

double ScriptedRandomSource::next_unit() { return units_[units_drawn_++ % units_.size()]; }

}  // namespace prbox
