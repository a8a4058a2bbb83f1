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

#ifndef PRBOX_PAPER_SUITE_H
#define PRBOX_PAPER_SUITE_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "prbox/experiment.h"

namespace prbox {

struct SuiteCheck {
    std::string id;
    std::string claim;
    std::string measured;
    std::string expected;
    bool passed = false;
};

struct SuiteResult {
    std::uint64_t seed = 0;
    std::vector<SuiteCheck> checks;

    bool all_passed() const;
};

/// Runs the reproduction matrix: PR condition, CHSH, non-signaling,
/// signaling channel, bit accounting, spacelike degeneracy, singlet sampler
/// and worker-count determinism. `options.epr_negation` exists to exercise
/// the suite against a miswired EPR box.
SuiteResult run_paper_suite(std::uint64_t seed, const RunOptions& options = {});

void print_suite_table(std::ostream& out, const SuiteResult& result);
nlohmann::ordered_json suite_to_json(const SuiteResult& result);

}  // namespace prbox

#endif  // PRBOX_PAPER_SUITE_H
