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


#include "qparity/amplitude_io.hpp"

#include "qparity/error.hpp"

#include <fmt/format.h>

#include <fstream>
#include <istream>
#include <sstream>

namespace qparity::io {
namespace {

bool skippable(const std::string &line) {
    const auto first = line.find_first_not_of(" \t\r");
    return first == std::string::npos || line[first] == '#';
}

} // namespace

Ket read_amplitudes(std::istream &in) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::size_t> dims;
    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line)) {
            continue;
        }
        std::istringstream header(line);
        std::string tag;
        header >> tag;
        if (tag != "dims:") {
            throw ArgumentError(fmt::format("line {}: expected 'dims:' header", line_no));
        }
        long long dim = 0;
        while (header >> dim) {
            if (dim < 2) {
                throw ArgumentError(fmt::format("line {}: factor dimension must be >= 2", line_no));
            }
            dims.push_back(static_cast<std::size_t>(dim));
        }
        if (!header.eof() || dims.empty()) {
            throw ArgumentError(fmt::format("line {}: malformed dims header", line_no));
        }
        break;
    }
    if (dims.empty()) {
        throw ArgumentError("amplitude file has no 'dims:' header");
    }
    std::size_t total = 1;
    for (const std::size_t d : dims) {
        if (total > (std::size_t{1} << 32) / d) {
            throw ResourceError("amplitude file describes an oversized state");
        }
        total *= d;
    }

    std::vector<cplx> amps;
    amps.reserve(total);
    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line)) {
            continue;
        }
        std::istringstream row(line);
        double re = 0.0;
        double im = 0.0;
        std::string extra;
        if (!(row >> re >> im) || (row >> extra)) {
            throw ArgumentError(fmt::format("line {}: expected 're im'", line_no));
        }
        if (amps.size() == total) {
            throw ArgumentError(fmt::format("line {}: more than {} amplitudes", line_no, total));
        }
        amps.emplace_back(re, im);
    }
    if (amps.size() != total) {
        throw ArgumentError(
            fmt::format("expected {} amplitudes, found {}", total, amps.size()));
    }
    return Ket(std::move(dims), std::move(amps));
}

Ket read_amplitude_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ArgumentError("cannot open amplitude file '" + path + "'");
    }
    return read_amplitudes(in);
}

void write_amplitudes(std::ostream &out, const Ket &k) {
    out << "dims:";
    for (const std::size_t d : k.factor_dims()) {
        out << ' ' << d;
    }
    out << '\n';
    for (const cplx a : k.amps()) {
        out << fmt::format("{:.17g} {:.17g}\n", a.real(), a.imag());
    }
}

} // namespace qparity::io
