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
 * Exact heralding-probability tables for |+>^n inputs.
 */
#pragma once

#include "qparity/exact.hpp"

#include <cstddef>
#include <vector>

namespace qparity::tables {

/// One outcome of the d = n module.
struct DickeRow {
    std::size_t n = 0;
    std::size_t parity = 0;
    /// p(parity), from exact bit-string counts.
    Rational per_outcome;
    /// Probability of heralding this state or its bit-flipped dual: twice
    /// per_outcome unless the branch is its own dual (GHZ, or D_{n,n/2}).
    Rational aggregate;
    /// 2^{1-n} C(n, k) (and 2^{1-n} for GHZ), the closed form that counts both
    /// dual outcomes.
    Rational closed_form;
    bool self_dual = false;
};

/// n >= 2. Rows for parities 0 .. n-1.
std::vector<DickeRow> dicke_table(std::size_t n);

struct WCompareRow {
    std::size_t n = 0;
    /// n 2^{1-n}: the W_n and X^n W_n outcomes together.
    Rational p_w;
    /// Linear-optics post-selection: n 2^{2-2n} (odd n), n 2^{3-2n} (even n).
    Rational baseline;
    Rational gain;
    /// 2^{n-2}
    Rational bound;
    bool meets_bound = false;
};

/// One row per n in [3, max_n] (W and its dual coincide below that).
std::vector<WCompareRow> w_compare_table(std::size_t max_n);

struct HalfDickeRow {
    std::size_t k = 0;
    /// C(2k, k) / 4^k
    Rational per_outcome;
    /// 1/sqrt(pi k)
    double asymptote = 0.0;
    double relative_error = 0.0;
    /// 2/sqrt(pi k): the dual-aggregated form, which double counts here since
    /// D_{2k,k} is its own dual.
    double aggregate_form = 0.0;
    bool self_dual_flag = true;
};

/// k = 1 .. max_n / 2.
std::vector<HalfDickeRow> half_dicke_table(std::size_t max_n);

/// Largest max_n accepted by the tables.
inline constexpr std::size_t kMaxTableN = 20;

} // namespace qparity::tables
