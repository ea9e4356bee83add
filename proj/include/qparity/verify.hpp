// Copyright 2026 The qparity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/**
 * @file
 * Self-check suites run by `qparity verify`. Every failed numeric check names
 * the (n, d, k) configuration it was looking at.
 */
#pragma once

#include "qparity/parity_module.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qparity::verify {

struct Check {
    std::string suite;
    std::string name;
    bool pass = false;
    /// Offending configuration and measured deviation on failure.
    std::string detail;
};

struct SuiteReport {
    std::vector<Check> checks;

    [[nodiscard]] bool all_pass() const;
    [[nodiscard]] std::size_t failures() const;
    void append(SuiteReport other);
};

inline constexpr std::array<std::string_view, 6> kSuiteNames = {
    "projectors", "examples", "probabilities", "gnk", "solver", "all"};

/// Hermiticity, orthogonality, completeness, traces and the Hadamard relation
/// between the two couplings, for 2 <= d <= n <= max_n.
SuiteReport projector_suite(std::size_t max_n = 8,
                            const parity::Envelope &envelope = parity::Envelope::from_environment());
/// Branch states of the n > d examples against predicted_branch, and the G_n /
/// G_{n,k} branches.
SuiteReport examples_suite();
/// d = n heralding probabilities against bit-string counting, 2 <= n <= max_n.
SuiteReport probability_suite(std::size_t max_n = 12);
/// <X^n>, <Y^n> on G_{n,k} for n <= max_n.
SuiteReport gnk_suite(std::size_t max_n = 10);
SuiteReport solver_suite();

/// One of kSuiteNames. Throws ArgumentError otherwise.
SuiteReport run_suite(std::string_view name);

} // namespace qparity::verify
