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

#include "prbox/paper_suite.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include "prbox/quantum.h"

namespace prbox {
namespace {

constexpr std::uint64_t kPerInput = 100000;

std::string fmt(double value) {
    std::ostringstream out;
    out << std::setprecision(8) << value;
    return out.str();
}

std::string box_name(BoxVariant variant) { return std::string(to_string(variant)); }

ExperimentConfig make_config(BoxVariant variant, std::uint64_t trials, std::uint64_t seed, InputStrategy inputs,
                             std::optional<ScheduleStrategy> schedule = std::nullopt) {
    ExperimentConfig config;
    config.variant = variant;
    config.trials = trials;
    config.seed = seed;
    config.inputs = inputs;
    config.schedule = schedule;
    return config;
}

// Compliance over every input pair and every value of the box's random draw.
double exhaustive_compliance(BoxVariant variant, ScheduleStrategy order, EprNegation negation) {
    int ok = 0;
    int total = 0;
    for (auto inputs : kAllInputPairs) {
        for (auto r : {kZero, kOne}) {
            ScriptedRandomSource rng({r});
            TrialResult result;
            if (!takes_schedule(variant)) {
                result = run_box(variant, canonical_schedule(inputs), rng);
            } else {
                const auto schedule = make_schedule(order, inputs, kDefaultDistance, rng);
                result = variant == BoxVariant::EprAssisted ? run_epr_box(schedule, rng, negation)
                                                            : run_box(variant, schedule, rng);
            }
            ok += !result.degenerate && pr_satisfied(result.inputs, result.a, result.b);
            ++total;
        }
    }
    return static_cast<double>(ok) / total;
}

void check_pr_condition(SuiteResult& out, const RunOptions& options) {
    for (auto variant : kAllVariants) {
        std::vector<ScheduleStrategy> orders{ScheduleStrategy::BobFirst};
        if (takes_schedule(variant)) orders = {ScheduleStrategy::AliceFirst, ScheduleStrategy::BobFirst};
        for (auto order : orders) {
            const double compliance = exhaustive_compliance(variant, order, options.epr_negation);
            const std::string suffix = takes_schedule(variant) ? "." + std::string(to_string(order)) : "";
            out.checks.push_back({"pr." + box_name(variant) + suffix,
                                  "PR condition a+b = xy mod 2, all inputs and random draws", fmt(compliance), "1",
                                  compliance == 1.0});
        }
    }
}

void check_chsh(SuiteResult& out, std::uint64_t seed, const RunOptions& options) {
    for (auto variant : {BoxVariant::SymmetricImmediate, BoxVariant::EprAssisted}) {
        for (auto order : {ScheduleStrategy::AliceFirst, ScheduleStrategy::BobFirst}) {
            const auto report =
                simulate(make_config(variant, kPerInput, seed, InputStrategy::uniform(), order), options);
            const double chsh = report.chsh.value_or(NAN);
            out.checks.push_back({"chsh." + box_name(variant) + "." + std::string(to_string(order)),
                                  "maximal CHSH violation, uniform inputs", fmt(chsh), "4", chsh == 4.0});
        }
    }
}

void check_nonsignaling(SuiteResult& out, std::uint64_t seed, const RunOptions& options) {
    struct Case {
        BoxVariant variant;
        std::optional<ScheduleStrategy> order;
    };
    const Case cases[] = {{BoxVariant::AsymmetricNonSignaling, std::nullopt},
                          {BoxVariant::SymmetricImmediate, ScheduleStrategy::AliceFirst},
                          {BoxVariant::SymmetricImmediate, ScheduleStrategy::BobFirst},
                          {BoxVariant::EprAssisted, ScheduleStrategy::AliceFirst},
                          {BoxVariant::EprAssisted, ScheduleStrategy::BobFirst}};
    for (const auto& c : cases) {
        const auto report = simulate(make_config(c.variant, 4 * kPerInput, seed, InputStrategy::sweep(), c.order), options);
        const auto& ns = *report.nonsignaling;
        const std::string suffix = c.order ? "." + std::string(to_string(*c.order)) : "";
        out.checks.push_back({"nonsignaling." + box_name(c.variant) + suffix, "marginals independent of remote input",
                              "delta_a=" + fmt(ns.delta_alice) + " delta_b=" + fmt(ns.delta_bob),
                              "<= " + fmt(ns.threshold), ns.passes});
    }
    const auto report =
        simulate(make_config(BoxVariant::Signaling, 4 * kPerInput, seed, InputStrategy::sweep()), options);
    const auto& ns = *report.nonsignaling;
    out.checks.push_back({"nonsignaling.signaling", "signaling box fails marginal selectivity",
                          "delta_a=" + fmt(ns.delta_alice) + " passes=" + (ns.passes ? "true" : "false"),
                          "delta_a = 1, fails", ns.delta_alice == 1.0 && !ns.passes});
}

void check_channel(SuiteResult& out, std::uint64_t seed, const RunOptions& options) {
    const auto protocol = InputStrategy::fixed(InputChoice::One, InputChoice::Alternate);
    for (auto variant : kAllVariants) {
        const auto report = simulate(make_config(variant, 10000, seed, protocol), options);
        const double mi = report.mutual_information.at(0).bits;  // Bob's input -> Alice's output
        const bool signaling = variant == BoxVariant::Signaling;
        out.checks.push_back({"channel." + box_name(variant), "I(y; a) with x = 1 and balanced y", fmt(mi),
                              signaling ? "1" : "<= 0.001", signaling ? mi == 1.0 : mi <= 0.001});
    }
}

void check_bits(SuiteResult& out, std::uint64_t seed, const RunOptions& options) {
    for (auto variant : kAllVariants) {
        for (auto order : {ScheduleStrategy::AliceFirst, ScheduleStrategy::BobFirst}) {
            if (!takes_schedule(variant) && order != ScheduleStrategy::BobFirst) continue;
            const std::optional<ScheduleStrategy> schedule =
                takes_schedule(variant) ? std::optional(order) : std::nullopt;
            const auto report = simulate(make_config(variant, 10000, seed, InputStrategy::uniform(), schedule), options);
            const double mean = report.bits.mean_bits_per_non_degenerate_trial;
            const double expected = expected_bit_cost(variant);
            const std::string suffix = takes_schedule(variant) ? "." + std::string(to_string(order)) : "";
            out.checks.push_back({"bits." + box_name(variant) + suffix, "classical bits exchanged per trial",
                                  fmt(mean), fmt(expected),
                                  mean == expected && report.bits.non_degenerate_trials == report.bits.trials});
        }
    }
}

void check_degenerate(SuiteResult& out, std::uint64_t seed, const RunOptions& options) {
    {
        const auto report = simulate(make_config(BoxVariant::SymmetricImmediate, kPerInput, seed,
                                                 InputStrategy::uniform(), ScheduleStrategy::Spacelike),
                                     options);
        out.checks.push_back({"degenerate.symmetric", "spacelike measurements: random outputs",
                              fmt(report.pr_compliance) + " (degenerate " + fmt(report.degenerate_fraction) + ")",
                              "0.5 +- 0.008",
                              std::abs(report.pr_compliance - 0.5) <= 0.008 && report.degenerate_fraction == 1.0});
    }
    for (auto bit : {kOne, kZero}) {
        const auto fixed = bit == kOne ? InputChoice::One : InputChoice::Zero;
        const auto report = simulate(make_config(BoxVariant::EprAssisted, 10000, seed, InputStrategy::fixed(fixed, fixed),
                                                 ScheduleStrategy::Spacelike),
                                     options);
        const double expected = bit == kOne ? 1.0 : 0.0;
        out.checks.push_back({"degenerate.epr.inputs" + std::to_string(bit.value()) + std::to_string(bit.value()),
                              "spacelike EPR box outputs raw anti-correlated outcomes", fmt(report.pr_compliance),
                              fmt(expected), report.pr_compliance == expected});
    }
}

void check_singlet(SuiteResult& out, std::uint64_t seed) {
    constexpr std::uint64_t n = 100000;
    {
        SeededRandomSource rng(seed, 0);
        std::uint64_t anti = 0;
        for (std::uint64_t i = 0; i < n; ++i) {
            const auto o = sample_singlet({0.3}, {0.3}, rng);
            anti += o.alice == -o.bob;
        }
        out.checks.push_back({"singlet.same_basis", "same-basis outcomes anti-correlated",
                              std::to_string(anti) + "/" + std::to_string(n), "all", anti == n});
    }
    {
        SeededRandomSource rng(seed, 1);
        std::int64_t sum = 0;
        for (std::uint64_t i = 0; i < n; ++i) {
            const auto o = sample_singlet({std::numbers::pi / 3.0}, {0.0}, rng);
            sum += o.alice * o.bob;
        }
        const double mean = static_cast<double>(sum) / n;
        const double tol = 5.0 * std::sqrt(1.0 / n);
        out.checks.push_back({"singlet.correlation", "E(delta = pi/3) = -cos(pi/3)", fmt(mean),
                              "-0.5 +- " + fmt(tol), std::abs(mean + 0.5) <= tol});
    }
    {
        const auto chsh = estimate_quantum_chsh(standard_chsh_angles(), 200000, seed);
        const double target = 2.0 * std::numbers::sqrt2;
        out.checks.push_back({"singlet.chsh", "quantum CHSH reaches the Tsirelson bound", fmt(chsh.value),
                              "|S| = 2.8284271 +- 0.02", std::abs(std::abs(chsh.value) - target) <= 0.02});
    }
}

void check_determinism(SuiteResult& out, std::uint64_t seed, const RunOptions& options) {
    for (auto variant : kAllVariants) {
        const std::optional<ScheduleStrategy> schedule =
            takes_schedule(variant) ? std::optional(ScheduleStrategy::Mixed) : std::nullopt;
        const auto config = make_config(variant, 20000, seed, InputStrategy::uniform(), schedule);
        std::string reference;
        bool identical = true;
        for (unsigned workers : {1U, 4U, 8U}) {
            RunOptions run = options;
            run.workers = workers;
            const auto dump = report_to_json(simulate(config, run)).dump();
            if (reference.empty()) {
                reference = dump;
            } else {
                identical = identical && dump == reference;
            }
        }
        out.checks.push_back({"determinism." + box_name(variant), "reports identical on 1, 4 and 8 workers",
                              identical ? "identical" : "differ", "identical", identical});
    }
}

}  // namespace

bool SuiteResult::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.passed; });
}

SuiteResult run_paper_suite(std::uint64_t seed, const RunOptions& options) {
    SuiteResult result;
    result.seed = seed;
    check_pr_condition(result, options);
    check_chsh(result, seed, options);
    check_nonsignaling(result, seed, options);
    check_channel(result, seed, options);
    check_bits(result, seed, options);
    check_degenerate(result, seed, options);
    check_singlet(result, seed);
    check_determinism(result, seed, options);
    return result;
}

void print_suite_table(std::ostream& out, const SuiteResult& result) {
    std::size_t id_width = 2;
    std::size_t measured_width = 8;
    for (const auto& c : result.checks) {
        id_width = std::max(id_width, c.id.size());
        measured_width = std::max(measured_width, c.measured.size());
    }
    out << std::left << std::setw(static_cast<int>(id_width)) << "check" << "  "
        << std::setw(static_cast<int>(measured_width)) << "measured" << "  verdict  expected / claim\n";
    for (const auto& c : result.checks) {
        out << std::left << std::setw(static_cast<int>(id_width)) << c.id << "  "
            << std::setw(static_cast<int>(measured_width)) << c.measured << "  " << (c.passed ? "PASS   " : "FAIL   ")
            << "  " << c.expected << " / " << c.claim << '\n';
    }
    const auto passed = std::count_if(result.checks.begin(), result.checks.end(), [](const auto& c) { return c.passed; });
    out << passed << "/" << result.checks.size() << " checks passed (seed " << result.seed << ")\n";
}

nlohmann::ordered_json suite_to_json(const SuiteResult& result) {
    nlohmann::ordered_json json;
    json["seed"] = result.seed;
    json["all_passed"] = result.all_passed();
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : result.checks) {
        checks.push_back({{"id", c.id},
                          {"claim", c.claim},
                          {"measured", c.measured},
                          {"expected", c.expected},
                          {"passed", c.passed}});
    }
    json["checks"] = checks;
    return json;
}

}  // namespace prbox
