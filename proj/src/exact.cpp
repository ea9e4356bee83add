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

#include "qparity/exact.hpp"

#include "qparity/error.hpp"

namespace qparity {

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    if (n > 62) {
        throw ArgumentError("binomial: n > 62 is not exactly representable here");
    }
    k = (k > n - k) ? n - k : k;
    std::uint64_t c = 1;
    for (unsigned i = 1; i <= k; ++i) {
        // c * (n - k + i) / i stays integral at every step.
        c = c * (n - k + i) / i;
    }
    return c;
}

std::uint64_t residue_class_count(unsigned n, unsigned d, unsigned residue) {
    if (d == 0) {
        throw ArgumentError("modulus must be positive");
    }
    std::uint64_t total = 0;
    for (unsigned j = residue % d; j <= n; j += d) {
        total += binomial(n, j);
    }
    return total;
}

Rational inverse_power_of_two(unsigned e) {
    if (e > 62) {
        throw ArgumentError("2^-e: exponent too large");
    }
    return Rational(1, std::int64_t{1} << e);
}

std::string to_string(const Rational &r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace qparity
