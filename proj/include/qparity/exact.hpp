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

#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace qparity {

using Rational = boost::rational<std::int64_t>;

/// C(n, k), zero outside 0 <= k <= n. Exact for n <= 62.
std::uint64_t binomial(unsigned n, unsigned k);

/// sum over 0 <= j <= n with j = residue (mod d) of C(n, j).
std::uint64_t residue_class_count(unsigned n, unsigned d, unsigned residue);

/// 2^-e as a rational. e <= 62.
Rational inverse_power_of_two(unsigned e);

/// "p/q"
std::string to_string(const Rational &r);

} // namespace qparity
