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

// prbox: run PR-box simulations and the reproduction suite.
//
//   prbox simulate --box symmetric --trials 100000 --seed 1 --schedule alice-first
//   prbox paper-suite --seed 42
//   prbox chsh-quantum --angles 0,1.5707963,0.7853982,-0.7853982 --trials 200000

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "prbox/experiment.h"
#include "prbox/paper_suite.h"
#include "prbox/quantum.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("PRBOX_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw prbox::UsageError(std::string("PRBOX_SEED is not an unsigned integer: ") + env);
        }
    }
    return 0;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot open " + path + " for writing");
    file << text;
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw prbox::UsageError("cannot read config file " + path);
    try {
        return nlohmann::json::parse(file);
    } catch (const nlohmann::json::parse_error& e) {
        throw prbox::UsageError("config file " + path + " is not valid JSON: " + e.what());
    }
}

struct SimulateArgs {
    std::string box;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    std::string inputs = "uniform";
    std::string schedule;
    double distance = prbox::kDefaultDistance;
    double z = 4.0;
    unsigned workers = 1;
    std::string out;
    std::string csv;
    std::string config_file;
};

int run_simulate(const CLI::App& cmd, const SimulateArgs& args) {
    prbox::ExperimentConfig config;
    if (!args.config_file.empty()) {
        auto json = read_json_file(args.config_file);
        // Accept a bare config or a whole report carrying one.
        if (json.contains("config")) json = json.at("config");
        config = prbox::config_from_json(json);
    } else if (args.box.empty()) {
        throw prbox::UsageError("simulate needs --box or --config");
    }
    const auto given = [&](const char* flag) { return cmd.count(flag) > 0; };
    if (given("--box")) {
        const auto variant = prbox::parse_box_variant(args.box);
        if (!variant) throw prbox::UsageError("unknown --box '" + args.box + "'");
        config.variant = *variant;
    }
    if (given("--trials")) config.trials = args.trials;
    if (given("--seed")) {
        config.seed = args.seed;
    } else if (args.config_file.empty()) {
        config.seed = default_seed();
    }
    if (given("--inputs")) config.inputs = prbox::parse_input_strategy(args.inputs);
    if (given("--schedule")) {
        config.schedule = prbox::parse_schedule_strategy(args.schedule);
        if (!config.schedule) throw prbox::UsageError("unknown --schedule '" + args.schedule + "'");
    }
    if (given("--distance")) config.distance = args.distance;
    if (given("--z")) config.z_threshold = args.z;

    for (const auto& warning : prbox::validate(config)) std::cerr << "warning: " << warning << '\n';
    const auto report = prbox::simulate(config, prbox::RunOptions{args.workers});
    write_output(args.out, prbox::report_to_json(report).dump(2) + "\n");
    if (!args.csv.empty()) {
        std::ostringstream csv;
        prbox::write_distribution_csv(csv, report.distribution);
        write_output(args.csv, csv.str());
    }
    return kExitOk;
}

int run_paper_suite(std::uint64_t seed, unsigned workers, const std::string& json_out) {
    const auto result = prbox::run_paper_suite(seed, prbox::RunOptions{workers});
    prbox::print_suite_table(std::cout, result);
    if (!json_out.empty()) write_output(json_out, prbox::suite_to_json(result).dump(2) + "\n");
    return result.all_passed() ? kExitOk : kExitCheckFailed;
}

int run_chsh_quantum(const std::vector<double>& angles, std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) throw prbox::UsageError("--trials must be at least 1");
    prbox::ChshAngles chsh_angles = prbox::standard_chsh_angles();
    if (!angles.empty()) {
        if (angles.size() != 4) throw prbox::UsageError("--angles needs exactly four values: a0,a1,b0,b1");
        chsh_angles = {{angles[0], angles[1]}, {angles[2], angles[3]}};
    }
    const auto result = prbox::estimate_quantum_chsh(chsh_angles, trials, seed);
    nlohmann::ordered_json json;
    json["angles"] = {{"alice", chsh_angles.alice}, {"bob", chsh_angles.bob}};
    json["trials_per_setting"] = trials;
    json["seed"] = seed;
    json["correlators"] = result.correlators;
    json["chsh"] = result.value;
    json["abs_chsh"] = std::abs(result.value);
    std::cout << json.dump(2) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mechanical PR-box simulator"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Run a batch of trials and print a JSON report");
    simulate->add_option("--box", sim.box, "signaling | asymmetric | symmetric | epr");
    simulate->add_option("--trials", sim.trials, "Number of trials")->check(CLI::PositiveNumber);
    simulate->add_option("--seed", sim.seed, "Master seed (default: $PRBOX_SEED or 0)");
    simulate->add_option("--inputs", sim.inputs, "uniform | sweep | fixed:X,Y with X,Y in {0,1,u,s}");
    simulate->add_option("--schedule", sim.schedule, "alice-first | bob-first | spacelike | lightlike | mixed");
    simulate->add_option("--distance", sim.distance, "Separation between Alice and Bob");
    simulate->add_option("--z", sim.z, "z threshold for the non-signaling test");
    simulate->add_option("--workers", sim.workers, "Worker threads")->check(CLI::PositiveNumber);
    simulate->add_option("--out", sim.out, "Write the report here instead of stdout");
    simulate->add_option("--csv", sim.csv, "Also write the x,y,a,b,count table here");
    simulate->add_option("--config", sim.config_file, "Re-run the config stored in a JSON file or report");

    std::uint64_t suite_seed = 0;
    unsigned suite_workers = std::max(1U, std::thread::hardware_concurrency());
    std::string suite_json;
    auto* suite = app.add_subcommand("paper-suite", "Run the reproduction checks; exit 1 if any fails");
    suite->add_option("--seed", suite_seed, "Master seed (default: $PRBOX_SEED or 0)");
    suite->add_option("--workers", suite_workers, "Worker threads")->check(CLI::PositiveNumber);
    suite->add_option("--json", suite_json, "Also write the results as JSON");

    std::vector<double> angles;
    std::uint64_t quantum_trials = 200000;
    std::uint64_t quantum_seed = 0;
    auto* quantum = app.add_subcommand("chsh-quantum", "Estimate the singlet CHSH value");
    quantum->add_option("--angles", angles, "a0,a1,b0,b1 in radians (default 0,pi/2,pi/4,-pi/4)")->delimiter(',');
    quantum->add_option("--trials", quantum_trials, "Samples per setting pair");
    quantum->add_option("--seed", quantum_seed, "Master seed (default: $PRBOX_SEED or 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (simulate->parsed()) return run_simulate(*simulate, sim);
        if (suite->parsed()) {
            if (suite->count("--seed") == 0) suite_seed = default_seed();
            return run_paper_suite(suite_seed, suite_workers, suite_json);
        }
        if (quantum->parsed()) {
            if (quantum->count("--seed") == 0) quantum_seed = default_seed();
            return run_chsh_quantum(angles, quantum_trials, quantum_seed);
        }
    } catch (const prbox::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    return kExitUsage;
}
