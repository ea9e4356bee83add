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


#include "qparity/tables.hpp"

#include "qparity/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qparity::tables {
namespace {

void check_range(std::size_t n, std::size_t lo) {
    if (n < lo || n > kMaxTableN) {
        throw ArgumentError("n must lie in [" + std::to_string(lo) + ", " +
                            std::to_string(kMaxTableN) + "]");
    }
}

Rational as_rational(std::uint64_t v) { return Rational(static_cast<std::int64_t>(v)); }

} // namespace

std::vector<DickeRow> dicke_table(std::size_t n) {
    check_range(n, 2);
    const auto un = static_cast<unsigned>(n);
    const Rational scale = inverse_power_of_two(un);
    std::vector<DickeRow> rows;
    for (std::size_t k = 0; k < n; ++k) {
        DickeRow r;
        r.n = n;
        r.parity = k;
        r.per_outcome = as_rational(residue_class_count(un, un, static_cast<unsigned>(k))) * scale;
        // parity 0 collects 0...0 and 1...1, its own bit flip
        r.self_dual = (k == 0) || (2 * k == n);
        r.aggregate = r.self_dual ? r.per_outcome : r.per_outcome * 2;
        r.closed_form = as_rational(k == 0 ? 1 : binomial(un, static_cast<unsigned>(k))) *
                        inverse_power_of_two(un - 1);
        rows.push_back(r);
    }
    return rows;
}

std::vector<WCompareRow> w_compare_table(std::size_t max_n) {
    check_range(max_n, 3);
    std::vector<WCompareRow> rows;
    for (std::size_t n = 3; n <= max_n; ++n) {
        const auto un = static_cast<unsigned>(n);
        const Rational nn(static_cast<std::int64_t>(n));
        WCompareRow r;
        r.n = n;
        r.p_w = nn * inverse_power_of_two(un - 1);
        r.baseline = (n % 2 == 1) ? nn * inverse_power_of_two(2 * un - 2)
                                  : nn * inverse_power_of_two(2 * un - 3);
        r.gain = r.p_w / r.baseline;
        r.bound = Rational(std::int64_t{1} << (n - 2));
        r.meets_bound = r.gain >= r.bound;
        rows.push_back(r);
    }
    return rows;
}

std::vector<HalfDickeRow> half_dicke_table(std::size_t max_n) {
    check_range(max_n, 2);
    std::vector<HalfDickeRow> rows;
    for (std::size_t k = 1; 2 * k <= max_n; ++k) {
        const auto uk = static_cast<unsigned>(k);
        HalfDickeRow r;
        r.k = k;
        r.per_outcome = as_rational(binomial(2 * uk, uk)) * inverse_power_of_two(2 * uk);
        const double kk = static_cast<double>(k);
        r.asymptote = 1.0 / std::sqrt(std::numbers::pi * kk);
        r.aggregate_form = 2.0 * r.asymptote;
        r.relative_error = std::abs(boost::rational_cast<double>(r.per_outcome) - r.asymptote) /
                           r.asymptote;
        rows.push_back(r);
    }
    return rows;
}

} // namespace qparity::tables
