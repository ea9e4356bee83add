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
 * `qparity simulate|solve|verify|table|sample`.
 *
 * Exit codes: 0 success, 1 infeasible spec or failed check, 2 usage error,
 * 3 resource envelope exceeded.
 */
#pragma once

#include <iosfwd>

namespace qparity::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

/// Writes results to `out` (or to --out FILE) and diagnostics to `err`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace qparity::cli
