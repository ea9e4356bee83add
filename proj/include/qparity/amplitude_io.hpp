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
 * Plain-text amplitude files:
 *
 *     dims: 2 2 2
 *     0.5 0
 *     ...
 *
 * one `re im` line per basis index after the header, in the library's index
 * order (first factor most significant). Blank lines and lines starting with
 * '#' are ignored.
 */
#pragma once

#include "qparity/linalg.hpp"

#include <iosfwd>
#include <string>

namespace qparity::io {

/// Throws ArgumentError on malformed input.
Ket read_amplitudes(std::istream &in);
/// Throws ArgumentError if the file cannot be opened or parsed.
Ket read_amplitude_file(const std::string &path);

/// Full round-trip precision (17 significant digits).
void write_amplitudes(std::ostream &out, const Ket &k);

} // namespace qparity::io
