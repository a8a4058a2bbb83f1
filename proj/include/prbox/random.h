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

#ifndef PRBOX_RANDOM_H
#define PRBOX_RANDOM_H

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "prbox/core.h"

namespace prbox {

/// Source of the randomness a box consumes.
class RandomSource {
   public:
    virtual ~RandomSource() = default;

    virtual Bit next_bit() = 0;
    /// Uniform double in [0, 1).
    virtual double next_unit() = 0;
};

/// Mixes a master seed and a stream index into an independent 64-bit seed.
std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t stream_index);

/**
 * Reproducible generator backed by std::mt19937_64.
 *
 * Constructed from (master seed, stream index) so that every trial owns its
 * own substream: results do not depend on the order in which trials run or
 * on how they are split across workers.
 */
class SeededRandomSource final : public RandomSource {
   public:
    explicit SeededRandomSource(std::uint64_t master_seed, std::uint64_t stream_index = 0);

    Bit next_bit() override;
    double next_unit() override;

   private:
    std::mt19937_64 engine_;
};

/// Replays fixed bit and unit sequences, cycling when exhausted. Used to
/// enumerate every random draw a box can see.
class ScriptedRandomSource final : public RandomSource {
   public:
    explicit ScriptedRandomSource(std::vector<Bit> bits, std::vector<double> units = {0.5});

    Bit next_bit() override;
    double next_unit() override;

    std::size_t bits_drawn() const { return bits_drawn_; }
    std::size_t units_drawn() const { return units_drawn_; }

   private:
    std::vector<Bit> bits_;
    std::vector<double> units_;
    std::size_t bits_drawn_ = 0;
    std::size_t units_drawn_ = 0;
};

}  // namespace prbox

#endif  // PRBOX_RANDOM_H
