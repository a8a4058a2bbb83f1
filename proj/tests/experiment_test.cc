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

#include <gtest/gtest.h>

#include <sstream>

#include "prbox/paper_suite.h"

namespace prbox {
namespace {

ExperimentConfig config_for(BoxVariant variant, std::uint64_t trials, std::uint64_t seed, InputStrategy inputs,
                            std::optional<ScheduleStrategy> schedule = std::nullopt) {
    ExperimentConfig config;
    config.variant = variant;
    config.trials = trials;
    config.seed = seed;
    config.inputs = inputs;
    config.schedule = schedule;
    return config;
}

TEST(InputStrategy, TextRoundTrip) {
    const InputChoice choices[] = {InputChoice::Zero, InputChoice::One, InputChoice::Uniform, InputChoice::Alternate};
    std::vector<InputStrategy> all = {InputStrategy::uniform(), InputStrategy::sweep()};
    for (auto x : choices) {
        for (auto y : choices) all.push_back(InputStrategy::fixed(x, y));
    }
    for (const auto& s : all) EXPECT_EQ(parse_input_strategy(to_string(s)), s) << to_string(s);
    EXPECT_EQ(parse_input_strategy("fixed:1,*"), InputStrategy::fixed(InputChoice::One, InputChoice::Uniform));
    for (const char* bad : {"", "fixed", "fixed:1", "fixed:2,0", "fixed:1,0,1", "random"}) {
        EXPECT_THROW(parse_input_strategy(bad), UsageError) << bad;
    }
}

TEST(InputStrategy, SweepAndAlternationAreBalanced) {
    ScriptedRandomSource rng({kOne});
    int counts[4] = {};
    for (std::uint64_t i = 0; i < 400; ++i) {
        const auto in = choose_inputs(InputStrategy::sweep(), i, rng);
        ++counts[2 * in.x.value() + in.y.value()];
    }
    for (int c : counts) EXPECT_EQ(c, 100);
    EXPECT_EQ(rng.bits_drawn(), 0U);

    int both[4] = {};
    const auto alt = InputStrategy::fixed(InputChoice::Alternate, InputChoice::Alternate);
    for (std::uint64_t i = 0; i < 400; ++i) {
        const auto in = choose_inputs(alt, i, rng);
        ++both[2 * in.x.value() + in.y.value()];
    }
    for (int c : both) EXPECT_EQ(c, 100);

    const auto one_alt = InputStrategy::fixed(InputChoice::One, InputChoice::Alternate);
    EXPECT_EQ(choose_inputs(one_alt, 0, rng), (InputPair{kOne, kZero}));
    EXPECT_EQ(choose_inputs(one_alt, 1, rng), (InputPair{kOne, kOne}));
}

TEST(ScheduleStrategy, VerdictsMatchNames) {
    ScriptedRandomSource rng({kZero});
    const InputPair in{kZero, kZero};
    EXPECT_EQ(first_measurer(make_schedule(ScheduleStrategy::AliceFirst, in, 5, rng)), FirstMeasurer::AliceFirst);
    EXPECT_EQ(first_measurer(make_schedule(ScheduleStrategy::BobFirst, in, 5, rng)), FirstMeasurer::BobFirst);
    EXPECT_EQ(first_measurer(make_schedule(ScheduleStrategy::Spacelike, in, 5, rng)), FirstMeasurer::Ambiguous);
    const auto light = make_schedule(ScheduleStrategy::Lightlike, in, 5, rng);
    EXPECT_EQ(causal_relation(light.alice_event, light.bob_event), CausalRelation::Lightlike);
    EXPECT_EQ(first_measurer(light), FirstMeasurer::AliceFirst);
    for (auto s : {ScheduleStrategy::AliceFirst, ScheduleStrategy::BobFirst, ScheduleStrategy::Spacelike,
                   ScheduleStrategy::Lightlike, ScheduleStrategy::Mixed}) {
        EXPECT_EQ(parse_schedule_strategy(to_string(s)), s);
    }
}

TEST(Validate, RejectsBadValuesAndConflicts) {
    auto config = config_for(BoxVariant::Signaling, 10, 0, InputStrategy::uniform(), ScheduleStrategy::Spacelike);
    try {
        validate(config);
        FAIL() << "expected a usage error";
    } catch (const UsageError& e) {
        EXPECT_NE(std::string(e.what()).find("spacelike"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("signaling"), std::string::npos);
    }
    config.schedule = ScheduleStrategy::BobFirst;
    EXPECT_EQ(validate(config).size(), 1U);
    config.schedule.reset();
    EXPECT_TRUE(validate(config).empty());

    config.trials = 0;
    EXPECT_THROW(validate(config), UsageError);
    config.trials = 1;
    config.distance = 0.0;
    EXPECT_THROW(validate(config), UsageError);
    config.distance = 1.0;
    config.z_threshold = -1.0;
    EXPECT_THROW(validate(config), UsageError);
}

TEST(RunTrials, IndependentOfWorkerCount) {
    const auto config = config_for(BoxVariant::EprAssisted, 5003, 17, InputStrategy::uniform(), ScheduleStrategy::Mixed);
    const auto serial = run_trials(config, {1});
    for (unsigned workers : {2U, 4U, 8U, 64U}) EXPECT_EQ(run_trials(config, {workers}), serial) << workers;
    EXPECT_EQ(run_trial(config, 4321), serial[4321]);
}

TEST(Simulate, SymmetricTimelike) {
    const auto report = simulate(
        config_for(BoxVariant::SymmetricImmediate, 100000, 1, InputStrategy::uniform(), ScheduleStrategy::AliceFirst), {4});
    EXPECT_EQ(report.pr_compliance, 1.0);
    ASSERT_TRUE(report.chsh.has_value());
    EXPECT_EQ(*report.chsh, 4.0);
    ASSERT_TRUE(report.nonsignaling.has_value());
    EXPECT_TRUE(report.nonsignaling->passes);
    EXPECT_EQ(report.degenerate_fraction, 0.0);
    EXPECT_EQ(report.bits.mean_bits_per_trial, 2.0);
}

TEST(Simulate, SignalingChannel) {
    const auto report = simulate(
        config_for(BoxVariant::Signaling, 10000, 1, InputStrategy::fixed(InputChoice::One, InputChoice::Alternate)));
    EXPECT_EQ(report.mutual_information.at(0).sender, Side::Bob);
    EXPECT_EQ(report.mutual_information.at(0).bits, 1.0);
    EXPECT_FALSE(report.nonsignaling.has_value());
    EXPECT_FALSE(report.chsh.has_value());
}

TEST(Simulate, SymmetricSpacelike) {
    const auto report = simulate(
        config_for(BoxVariant::SymmetricImmediate, 100000, 1, InputStrategy::uniform(), ScheduleStrategy::Spacelike));
    EXPECT_EQ(report.degenerate_fraction, 1.0);
    EXPECT_NEAR(report.pr_compliance, 0.5, 0.008);
    EXPECT_EQ(report.bits.non_degenerate_trials, 0U);
}

TEST(Report, ConfigRoundTripAndDeterminism) {
    const auto config = config_for(BoxVariant::AsymmetricNonSignaling, 3000, 5, InputStrategy::sweep());
    const auto json = config_to_json(config);
    EXPECT_EQ(config_from_json(nlohmann::json::parse(json.dump())), config);

    const auto first = report_to_json(simulate(config, {1})).dump();
    const auto again = report_to_json(simulate(config_from_json(nlohmann::json::parse(first).at("config")), {3})).dump();
    EXPECT_EQ(first, again);

    EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"box":"nope"})")), UsageError);
    auto broken = nlohmann::json::parse(json.dump());
    broken["schedule"] = "sideways";
    EXPECT_THROW(config_from_json(broken), UsageError);
}

TEST(Report, JsonHasEveryField) {
    const auto report = simulate(config_for(BoxVariant::EprAssisted, 2000, 3, InputStrategy::uniform()));
    const auto json = report_to_json(report);
    for (const char* key : {"config", "effective_schedule", "distribution", "pr_compliance", "nonsignaling", "chsh",
                            "mutual_information", "bit_accounting", "degenerate_fraction"}) {
        EXPECT_TRUE(json.contains(key)) << key;
    }
    EXPECT_EQ(json["effective_schedule"], "alice-first");
    EXPECT_EQ(json["distribution"].size(), 4U);
    EXPECT_EQ(json["bit_accounting"]["trigger_bit_cost"], 0);
}

TEST(Report, CsvTable) {
    JointDistribution dist;
    dist.add({kOne, kZero}, kOne, kOne, 7);
    std::ostringstream out;
    write_distribution_csv(out, dist);
    const auto text = out.str();
    EXPECT_EQ(text.rfind("x,y,a,b,count\n0,0,0,0,0\n", 0), 0U);
    EXPECT_NE(text.find("\n1,0,1,1,7\n"), std::string::npos);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 17);
}

TEST(PaperSuite, MiswiredEprBoxFailsBobFirst) {
    const auto result = run_paper_suite(42, {8, EprNegation::BobOnly});
    EXPECT_FALSE(result.all_passed());
    bool saw_bob_first = false;
    for (const auto& check : result.checks) {
        if (check.id == "pr.epr.bob-first") {
            saw_bob_first = true;
            EXPECT_FALSE(check.passed);
        }
        if (check.id == "pr.epr.alice-first" || check.id.starts_with("pr.symmetric")) {
            EXPECT_TRUE(check.passed) << check.id;
        }
    }
    EXPECT_TRUE(saw_bob_first);
}

}  // namespace
}  // namespace prbox
