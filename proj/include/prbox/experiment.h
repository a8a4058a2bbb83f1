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

#ifndef PRBOX_EXPERIMENT_H
#define PRBOX_EXPERIMENT_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "prbox/analysis.h"
#include "prbox/boxes.h"
#include "prbox/random.h"
#include "prbox/spacetime.h"

namespace prbox {

/// Invalid configuration or flag combination. The CLI maps it to exit code 2.
class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// How one side picks its input per trial. `Alternate` flips with the trial
/// index, giving exactly balanced inputs.
enum class InputChoice { Zero, One, Uniform, Alternate };

/**
 * Per-trial input selection.
 *
 * Text forms: `uniform` (both sides uniform), `sweep` (trial i uses input
 * pair i mod 4, so every pair gets the same count), and `fixed:X,Y` where
 * each of X and Y is `0`, `1`, `u` (uniform) or `s` (alternating).
 */
struct InputStrategy {
    enum class Kind { Uniform, Sweep, Fixed };
    Kind kind = Kind::Uniform;
    InputChoice x = InputChoice::Uniform;
    InputChoice y = InputChoice::Uniform;

    static InputStrategy uniform() { return {}; }
    static InputStrategy sweep() { return {Kind::Sweep, InputChoice::Uniform, InputChoice::Uniform}; }
    static InputStrategy fixed(InputChoice x, InputChoice y) { return {Kind::Fixed, x, y}; }

    friend bool operator==(const InputStrategy&, const InputStrategy&) = default;
};

std::string to_string(const InputStrategy& strategy);
/// Throws UsageError on malformed text.
InputStrategy parse_input_strategy(std::string_view text);

/// Draws from rng only for uniform choices: x first, then y.
InputPair choose_inputs(const InputStrategy& strategy, std::uint64_t trial_index, RandomSource& rng);

enum class ScheduleStrategy { AliceFirst, BobFirst, Spacelike, Lightlike, Mixed };

std::string_view to_string(ScheduleStrategy strategy);
std::optional<ScheduleStrategy> parse_schedule_strategy(std::string_view name);

/// Concrete events for a strategy at separation `distance`: the first side
/// measures at t = 0 and the second at t = 2 * distance (timelike), both at
/// t = 0 (spacelike), or the second exactly on Alice's light cone
/// (lightlike). Mixed draws one of the other four with two bits from rng.
TrialSchedule make_schedule(ScheduleStrategy strategy, InputPair inputs, double distance, RandomSource& rng);

struct ExperimentConfig {
    BoxVariant variant = BoxVariant::SymmetricImmediate;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    InputStrategy inputs;
    /// Unset means the variant's default: the canonical ordering for the
    /// sequential boxes, alice-first for the others.
    std::optional<ScheduleStrategy> schedule;
    double distance = kDefaultDistance;
    double z_threshold = 4.0;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Throws UsageError on invalid values or conflicting flags; returns
/// warnings for settings that are accepted but ignored.
std::vector<std::string> validate(const ExperimentConfig& config);

struct RunOptions {
    unsigned workers = 1;
    EprNegation epr_negation = EprNegation::SecondMeasurer;
};

/// Runs one trial using substream `trial_index` of the config's seed.
TrialResult run_trial(const ExperimentConfig& config, std::uint64_t trial_index,
                      EprNegation epr_negation = EprNegation::SecondMeasurer);

/// Runs all trials, split across `options.workers` threads. The result is
/// independent of the worker count.
std::vector<TrialResult> run_trials(const ExperimentConfig& config, const RunOptions& options = {});

struct MutualInformationEntry {
    Side sender;
    Side receiver;
    double bits = 0.0;
};

struct Report {
    ExperimentConfig config;
    JointDistribution distribution;
    double pr_compliance = 0.0;
    /// Present only when every input pair occurred.
    std::optional<NonSignalingReport> nonsignaling;
    std::optional<double> chsh;
    std::vector<MutualInformationEntry> mutual_information;
    BitAccountingReport bits;
    double degenerate_fraction = 0.0;
};

Report analyze(const ExperimentConfig& config, std::span<const TrialResult> results);

/// validate + run_trials + analyze.
Report simulate(const ExperimentConfig& config, const RunOptions& options = {});

nlohmann::ordered_json config_to_json(const ExperimentConfig& config);
/// Inverse of config_to_json. Throws UsageError on bad fields.
ExperimentConfig config_from_json(const nlohmann::json& json);

nlohmann::ordered_json report_to_json(const Report& report);

/// Header `x,y,a,b,count`, then the 16 cells in (x, y, a, b) order.
void write_distribution_csv(std::ostream& out, const JointDistribution& dist);

}  // namespace prbox

#endif  // PRBOX_EXPERIMENT_H
