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

#include "prbox/experiment.h"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <thread>

namespace prbox {
namespace {

using nlohmann::ordered_json;

constexpr ScheduleStrategy kAllScheduleStrategies[] = {ScheduleStrategy::AliceFirst, ScheduleStrategy::BobFirst,
                                                       ScheduleStrategy::Spacelike, ScheduleStrategy::Lightlike,
                                                       ScheduleStrategy::Mixed};

char choice_code(InputChoice choice) {
    switch (choice) {
        case InputChoice::Zero:
            return '0';
        case InputChoice::One:
            return '1';
        case InputChoice::Uniform:
            return 'u';
        case InputChoice::Alternate:
            return 's';
    }
    return '?';
}

InputChoice parse_choice(std::string_view text, std::string_view whole) {
    if (text == "0") return InputChoice::Zero;
    if (text == "1") return InputChoice::One;
    if (text == "u" || text == "*") return InputChoice::Uniform;
    if (text == "s") return InputChoice::Alternate;
    throw UsageError("bad input choice '" + std::string(text) + "' in '" + std::string(whole) +
                     "' (expected 0, 1, u or s)");
}

Bit pick(InputChoice choice, std::uint64_t alternation, RandomSource& rng) {
    switch (choice) {
        case InputChoice::Zero:
            return kZero;
        case InputChoice::One:
            return kOne;
        case InputChoice::Uniform:
            return rng.next_bit();
        case InputChoice::Alternate:
            return Bit(static_cast<int>(alternation & 1U));
    }
    throw std::logic_error("unknown input choice");
}

ScheduleStrategy effective_schedule(const ExperimentConfig& config) {
    if (!takes_schedule(config.variant)) return ScheduleStrategy::BobFirst;
    return config.schedule.value_or(ScheduleStrategy::AliceFirst);
}

ordered_json distribution_to_json(const JointDistribution& dist) {
    ordered_json table = ordered_json::array();
    for (auto inputs : kAllInputPairs) {
        ordered_json row;
        row["x"] = inputs.x.value();
        row["y"] = inputs.y.value();
        row["trials"] = dist.trials(inputs);
        ordered_json counts;
        for (auto a : {kZero, kOne}) {
            for (auto b : {kZero, kOne}) {
                counts[std::to_string(a.value()) + std::to_string(b.value())] = dist.count(inputs, a, b);
            }
        }
        row["counts"] = counts;
        table.push_back(row);
    }
    return table;
}

}  // namespace

std::string to_string(const InputStrategy& strategy) {
    switch (strategy.kind) {
        case InputStrategy::Kind::Uniform:
            return "uniform";
        case InputStrategy::Kind::Sweep:
            return "sweep";
        case InputStrategy::Kind::Fixed:
            return std::string("fixed:") + choice_code(strategy.x) + "," + choice_code(strategy.y);
    }
    return "unknown";
}

InputStrategy parse_input_strategy(std::string_view text) {
    if (text == "uniform") return InputStrategy::uniform();
    if (text == "sweep") return InputStrategy::sweep();
    constexpr std::string_view prefix = "fixed:";
    if (text.starts_with(prefix)) {
        const auto body = text.substr(prefix.size());
        const auto comma = body.find(',');
        if (comma == std::string_view::npos) {
            throw UsageError("--inputs fixed:X,Y needs two comma-separated values, got '" + std::string(text) + "'");
        }
        return InputStrategy::fixed(parse_choice(body.substr(0, comma), text), parse_choice(body.substr(comma + 1), text));
    }
    throw UsageError("unknown input strategy '" + std::string(text) + "' (expected uniform, sweep or fixed:X,Y)");
}

InputPair choose_inputs(const InputStrategy& strategy, std::uint64_t trial_index, RandomSource& rng) {
    switch (strategy.kind) {
        case InputStrategy::Kind::Sweep:
            return kAllInputPairs[trial_index % 4];
        case InputStrategy::Kind::Uniform: {
            const Bit x = rng.next_bit();
            const Bit y = rng.next_bit();
            return {x, y};
        }
        case InputStrategy::Kind::Fixed: {
            // With both sides alternating, x follows the second bit of the index so
            // that all four pairs appear.
            const bool both = strategy.x == InputChoice::Alternate && strategy.y == InputChoice::Alternate;
            const Bit x = pick(strategy.x, both ? trial_index >> 1 : trial_index, rng);
            const Bit y = pick(strategy.y, trial_index, rng);
            return {x, y};
        }
    }
    throw std::logic_error("unknown input strategy");
}

std::string_view to_string(ScheduleStrategy strategy) {
    switch (strategy) {
        case ScheduleStrategy::AliceFirst:
            return "alice-first";
        case ScheduleStrategy::BobFirst:
            return "bob-first";
        case ScheduleStrategy::Spacelike:
            return "spacelike";
        case ScheduleStrategy::Lightlike:
            return "lightlike";
        case ScheduleStrategy::Mixed:
            return "mixed";
    }
    return "unknown";
}

std::optional<ScheduleStrategy> parse_schedule_strategy(std::string_view name) {
    for (auto strategy : kAllScheduleStrategies) {
        if (to_string(strategy) == name) return strategy;
    }
    return std::nullopt;
}

TrialSchedule make_schedule(ScheduleStrategy strategy, InputPair inputs, double distance, RandomSource& rng) {
    switch (strategy) {
        case ScheduleStrategy::AliceFirst:
            return {{0.0, 0.0}, {2.0 * distance, distance}, inputs};
        case ScheduleStrategy::BobFirst:
            return {{2.0 * distance, 0.0}, {0.0, distance}, inputs};
        case ScheduleStrategy::Spacelike:
            return {{0.0, 0.0}, {0.0, distance}, inputs};
        case ScheduleStrategy::Lightlike:
            return {{0.0, 0.0}, {distance, distance}, inputs};
        case ScheduleStrategy::Mixed: {
            const int high = rng.next_bit().value();
            const int low = rng.next_bit().value();
            return make_schedule(kAllScheduleStrategies[2 * high + low], inputs, distance, rng);
        }
    }
    throw std::logic_error("unknown schedule strategy");
}

std::vector<std::string> validate(const ExperimentConfig& config) {
    std::vector<std::string> warnings;
    if (config.trials < 1) throw UsageError("--trials must be at least 1");
    if (!std::isfinite(config.distance) || !(config.distance > 0.0)) {
        throw UsageError("--distance must be a positive finite number");
    }
    if (!std::isfinite(config.z_threshold) || !(config.z_threshold > 0.0)) {
        throw UsageError("--z must be a positive finite number");
    }
    if (!takes_schedule(config.variant) && config.schedule) {
        const std::string box(to_string(config.variant));
        if (*config.schedule != ScheduleStrategy::BobFirst) {
            throw UsageError("--schedule " + std::string(to_string(*config.schedule)) + " conflicts with --box " + box +
                             ": this box takes no schedule (Bob always acts first)");
        }
        warnings.push_back("--schedule bob-first is the fixed ordering of --box " + box + "; ignored");
    }
    return warnings;
}

TrialResult run_trial(const ExperimentConfig& config, std::uint64_t trial_index, EprNegation epr_negation) {
    SeededRandomSource rng(config.seed, trial_index);
    const InputPair inputs = choose_inputs(config.inputs, trial_index, rng);
    if (!takes_schedule(config.variant)) {
        return run_box(config.variant, canonical_schedule(inputs, config.distance), rng);
    }
    const TrialSchedule schedule = make_schedule(effective_schedule(config), inputs, config.distance, rng);
    if (config.variant == BoxVariant::EprAssisted) return run_epr_box(schedule, rng, epr_negation);
    return run_box(config.variant, schedule, rng);
}

std::vector<TrialResult> run_trials(const ExperimentConfig& config, const RunOptions& options) {
    std::vector<TrialResult> results(config.trials);
    const std::uint64_t workers = std::clamp<std::uint64_t>(options.workers, 1, config.trials);
    const auto fill = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) results[i] = run_trial(config, i, options.epr_negation);
    };
    if (workers == 1) {
        fill(0, config.trials);
        return results;
    }
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    const std::uint64_t chunk = (config.trials + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t begin = w * chunk;
        const std::uint64_t end = std::min(config.trials, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back(fill, begin, end);
    }
    threads.clear();  // joins
    return results;
}

Report analyze(const ExperimentConfig& config, std::span<const TrialResult> results) {
    Report report;
    report.config = config;
    report.distribution = estimate_distribution(results);
    report.pr_compliance = pr_compliance(results);
    bool all_inputs = true;
    for (auto inputs : kAllInputPairs) all_inputs = all_inputs && report.distribution.trials(inputs) > 0;
    if (all_inputs) {
        report.nonsignaling = nonsignaling_test(report.distribution, config.z_threshold);
        report.chsh = chsh_value(report.distribution);
    }
    report.mutual_information = {
        {Side::Bob, Side::Alice, channel_mutual_information(results, Side::Bob, Side::Alice)},
        {Side::Alice, Side::Bob, channel_mutual_information(results, Side::Alice, Side::Bob)},
    };
    report.bits = bit_accounting(results);
    report.degenerate_fraction = degenerate_fraction(results);
    return report;
}

Report simulate(const ExperimentConfig& config, const RunOptions& options) {
    validate(config);
    const auto results = run_trials(config, options);
    return analyze(config, results);
}

ordered_json config_to_json(const ExperimentConfig& config) {
    ordered_json json;
    json["box"] = to_string(config.variant);
    json["trials"] = config.trials;
    json["seed"] = config.seed;
    json["inputs"] = to_string(config.inputs);
    json["schedule"] = config.schedule ? ordered_json(to_string(*config.schedule)) : ordered_json(nullptr);
    json["distance"] = config.distance;
    json["z"] = config.z_threshold;
    return json;
}

ExperimentConfig config_from_json(const nlohmann::json& json) {
    try {
        ExperimentConfig config;
        const auto box = json.at("box").get<std::string>();
        const auto variant = parse_box_variant(box);
        if (!variant) throw UsageError("unknown box '" + box + "'");
        config.variant = *variant;
        config.trials = json.at("trials").get<std::uint64_t>();
        config.seed = json.at("seed").get<std::uint64_t>();
        config.inputs = parse_input_strategy(json.at("inputs").get<std::string>());
        if (const auto& schedule = json.at("schedule"); !schedule.is_null()) {
            const auto name = schedule.get<std::string>();
            config.schedule = parse_schedule_strategy(name);
            if (!config.schedule) throw UsageError("unknown schedule '" + name + "'");
        }
        config.distance = json.at("distance").get<double>();
        config.z_threshold = json.at("z").get<double>();
        return config;
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed config: ") + e.what());
    }
}

ordered_json report_to_json(const Report& report) {
    ordered_json json;
    json["config"] = config_to_json(report.config);
    json["effective_schedule"] = takes_schedule(report.config.variant)
                                     ? std::string(to_string(effective_schedule(report.config)))
                                     : std::string("canonical");
    json["distribution"] = distribution_to_json(report.distribution);
    json["pr_compliance"] = report.pr_compliance;
    if (report.nonsignaling) {
        const auto& ns = *report.nonsignaling;
        json["nonsignaling"] = {{"delta_alice", ns.delta_alice},
                                {"delta_bob", ns.delta_bob},
                                {"threshold", ns.threshold},
                                {"min_trials_per_input", ns.min_trials_per_input},
                                {"passes", ns.passes}};
    } else {
        json["nonsignaling"] = nullptr;
    }
    json["chsh"] = report.chsh ? ordered_json(*report.chsh) : ordered_json(nullptr);
    ordered_json mi = ordered_json::array();
    for (const auto& entry : report.mutual_information) {
        mi.push_back({{"sender_input", to_string(entry.sender)},
                      {"receiver_output", to_string(entry.receiver)},
                      {"bits", entry.bits}});
    }
    json["mutual_information"] = mi;
    const auto& bits = report.bits;
    json["bit_accounting"] = {{"trials", bits.trials},
                              {"non_degenerate_trials", bits.non_degenerate_trials},
                              {"alice_to_bob_bits", bits.alice_to_bob_bits},
                              {"bob_to_alice_bits", bits.bob_to_alice_bits},
                              {"total_bits", bits.total_bits},
                              {"mean_alice_to_bob", bits.mean_alice_to_bob},
                              {"mean_bob_to_alice", bits.mean_bob_to_alice},
                              {"mean_bits_per_trial", bits.mean_bits_per_trial},
                              {"mean_bits_per_non_degenerate_trial", bits.mean_bits_per_non_degenerate_trial},
                              {"trigger_count", bits.trigger_count},
                              {"trigger_bit_cost", 0}};
    json["degenerate_fraction"] = report.degenerate_fraction;
    return json;
}

void write_distribution_csv(std::ostream& out, const JointDistribution& dist) {
    out << "x,y,a,b,count\n";
    for (auto inputs : kAllInputPairs) {
        for (auto a : {kZero, kOne}) {
            for (auto b : {kZero, kOne}) {
                out << inputs.x.value() << ',' << inputs.y.value() << ',' << a.value() << ',' << b.value() << ','
                    << dist.count(inputs, a, b) << '\n';
            }
        }
    }
}

}  // namespace prbox
