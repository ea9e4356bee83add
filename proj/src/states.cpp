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

#include "qparity/states.hpp"

#include "qparity/error.hpp"
#include "qparity/exact.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <vector>

namespace qparity::states {
namespace {

constexpr std::size_t kMaxQubits = 30;

std::size_t weight(std::size_t x) { return static_cast<std::size_t>(std::popcount(x)); }

void require_qubits(const Ket &v, const char *what) {
    if (!v.all_qubits()) {
        throw DimensionError(std::string(what) + ": every factor must be a qubit");
    }
}

std::vector<cplx> dicke_amps(std::size_t n, std::size_t k) {
    if (n == 0 || n > kMaxQubits) {
        throw ArgumentError("qubit count out of range");
    }
    if (k > n) {
        throw ArgumentError("excitation count exceeds qubit count");
    }
    const std::size_t dim = std::size_t{1} << n;
    const double amp =
        1.0 / std::sqrt(static_cast<double>(binomial(static_cast<unsigned>(n),
                                                     static_cast<unsigned>(k))));
    std::vector<cplx> amps(dim);
    for (std::size_t x = 0; x < dim; ++x) {
        if (weight(x) == k) {
            amps[x] = amp;
        }
    }
    return amps;
}

void require_multi(std::size_t n) {
    if (n < 2) {
        throw ArgumentError("family needs at least two qubits");
    }
}

/// Sparse symmetric-subspace vector: excitation count -> coefficient.
using SymCoeffs = std::vector<std::pair<std::size_t, double>>;

double overlap_fidelity(const SymCoeffs &ref, const std::vector<cplx> &c, bool flipped) {
    const std::size_t n = c.size() - 1;
    cplx s = 0.0;
    for (const auto &[k, r] : ref) {
        s += r * c[flipped ? n - k : k];
    }
    return std::norm(s);
}

/// Leading eigenvector of the 2x2 reduced state of qubit q.
std::pair<cplx, cplx> dominant_local_state(const Ket &v, std::size_t q) {
    const std::size_t n = v.num_factors();
    const std::size_t bit = std::size_t{1} << (n - 1 - q);
    double a = 0.0;
    double c = 0.0;
    cplx b = 0.0;
    for (std::size_t x = 0; x < v.dim(); ++x) {
        if (x & bit) {
            continue;
        }
        const cplx v0 = v[x];
        const cplx v1 = v[x | bit];
        a += std::norm(v0);
        c += std::norm(v1);
        b += v0 * std::conj(v1);
    }
    const double half_gap = 0.5 * (a - c);
    const double lambda = 0.5 * (a + c) + std::sqrt(half_gap * half_gap + std::norm(b));
    if (std::abs(b) < 1e-300) {
        return (a >= c) ? std::pair<cplx, cplx>{1.0, 0.0} : std::pair<cplx, cplx>{0.0, 1.0};
    }
    cplx e0 = b;
    cplx e1 = lambda - a;
    const double norm = std::sqrt(std::norm(e0) + std::norm(e1));
    return {e0 / norm, e1 / norm};
}

double product_fidelity(const Ket &v) {
    const std::size_t n = v.num_factors();
    std::vector<Ket> locals;
    locals.reserve(n);
    for (std::size_t q = 0; q < n; ++q) {
        const auto [e0, e1] = dominant_local_state(v, q);
        locals.emplace_back(std::vector<cplx>{e0, e1});
    }
    return fidelity(tensor(locals), v);
}

} // namespace

Ket dicke(std::size_t n, std::size_t k) { return Ket::qubits(n, dicke_amps(n, k)); }

Ket ghz(std::size_t n) {
    require_multi(n);
    std::vector<cplx> amps(std::size_t{1} << n);
    amps.front() = 1.0 / std::numbers::sqrt2;
    amps.back() = 1.0 / std::numbers::sqrt2;
    return Ket::qubits(n, std::move(amps));
}

Ket w(std::size_t n) {
    require_multi(n);
    return dicke(n, 1);
}

Ket g(std::size_t n) {
    require_multi(n);
    return g_general(n, 1);
}

Ket g_general(std::size_t n, std::size_t k) {
    require_multi(n);
    if (k > n) {
        throw ArgumentError("excitation count exceeds qubit count");
    }
    if (2 * k == n) {
        return dicke(n, k);
    }
    std::vector<cplx> amps = dicke_amps(n, k);
    const std::vector<cplx> dual = dicke_amps(n, n - k);
    for (std::size_t x = 0; x < amps.size(); ++x) {
        amps[x] = (amps[x] + dual[x]) / std::numbers::sqrt2;
    }
    return Ket::qubits(n, std::move(amps));
}

Ket bitflip_all(const Ket &v) {
    require_qubits(v, "bitflip_all");
    const std::size_t mask = v.dim() - 1;
    std::vector<cplx> out(v.dim());
    for (std::size_t x = 0; x < v.dim(); ++x) {
        out[~x & mask] = v[x];
    }
    return Ket(std::vector<std::size_t>(v.factor_dims().begin(), v.factor_dims().end()),
               std::move(out));
}

std::string DickeDecomposition::weight_form() const {
    double smallest = 0.0;
    for (const auto &[k, c] : coeffs) {
        const double w2 = std::norm(c);
        if (w2 > 0.0 && (smallest == 0.0 || w2 < smallest)) {
            smallest = w2;
        }
    }
    std::string out;
    for (const auto &[k, c] : coeffs) {
        const double ratio = std::norm(c) / smallest;
        const double rounded = std::round(ratio);
        if (!out.empty()) {
            out += ' ';
        }
        if (std::abs(ratio - rounded) <= 1e-6 * std::max(1.0, rounded)) {
            out += fmt::format("{}:{}", k, static_cast<long long>(rounded));
        } else {
            out += fmt::format("{}:{:.6g}", k, ratio);
        }
    }
    return out;
}

DickeDecomposition dicke_decompose(const Ket &v, double tol) {
    require_qubits(v, "dicke_decompose");
    if (!v.normalized(kOperatorTol)) {
        throw PreconditionError("dicke_decompose needs a normalized state");
    }
    const Ket vc = canonical_phase(v, tol);
    const std::size_t n = v.num_factors();

    std::vector<cplx> sums(n + 1);
    for (std::size_t x = 0; x < vc.dim(); ++x) {
        sums[weight(x)] += vc[x];
    }
    std::vector<cplx> coeff(n + 1);
    std::vector<double> inv_sqrt_binom(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        inv_sqrt_binom[k] = 1.0 / std::sqrt(static_cast<double>(
                                      binomial(static_cast<unsigned>(n), static_cast<unsigned>(k))));
        coeff[k] = sums[k] * inv_sqrt_binom[k];
    }

    double residual2 = 0.0;
    for (std::size_t x = 0; x < vc.dim(); ++x) {
        const std::size_t k = weight(x);
        residual2 += std::norm(vc[x] - coeff[k] * inv_sqrt_binom[k]);
    }

    DickeDecomposition out;
    out.n = n;
    out.residual = std::sqrt(residual2);
    for (std::size_t k = 0; k <= n; ++k) {
        if (std::abs(coeff[k]) >= tol) {
            out.coeffs.emplace(k, coeff[k]);
        }
    }
    return out;
}

Ket dicke_span(const DickeDecomposition &decomposition) {
    const std::size_t n = decomposition.n;
    if (n == 0 || n > kMaxQubits) {
        throw ArgumentError("qubit count out of range");
    }
    std::vector<cplx> amps(std::size_t{1} << n);
    for (const auto &[k, c] : decomposition.coeffs) {
        const double scale = 1.0 / std::sqrt(static_cast<double>(
                                       binomial(static_cast<unsigned>(n), static_cast<unsigned>(k))));
        for (std::size_t x = 0; x < amps.size(); ++x) {
            if (weight(x) == k) {
                amps[x] = c * scale;
            }
        }
    }
    return Ket::qubits(n, std::move(amps));
}

DickeDecomposition predicted_branch(std::size_t n, std::size_t d, std::size_t k) {
    if (n == 0) {
        throw ArgumentError("qubit count must be positive");
    }
    if (d < 2 || k >= d) {
        throw ArgumentError("need d >= 2 and 0 <= k < d");
    }
    const auto nn = static_cast<unsigned>(n);
    const std::uint64_t total =
        residue_class_count(nn, static_cast<unsigned>(d), static_cast<unsigned>(k));
    DickeDecomposition out;
    out.n = n;
    if (total == 0) {
        return out;
    }
    for (std::size_t j = k; j <= n; j += d) {
        const double c = std::sqrt(static_cast<double>(binomial(nn, static_cast<unsigned>(j))) /
                                   static_cast<double>(total));
        out.coeffs.emplace(j, c);
    }
    return out;
}

std::string ClassificationResult::family_name() const {
    switch (family) {
    case Family::GHZ:
        return "GHZ";
    case Family::W:
        return "W";
    case Family::Dicke:
        return fmt::format("Dicke({},{})", n, k);
    case Family::G:
        return fmt::format("G_{}", n);
    case Family::GGeneral:
        return fmt::format("G({},{})", n, k);
    case Family::DickeSum:
        return "DickeSum";
    case Family::Product:
        return "Product";
    case Family::Other:
        break;
    }
    return "Other";
}

std::string ClassificationResult::label() const {
    return up_to_bitflip ? family_name() + " [X^n]" : family_name();
}

ClassificationResult classify(const Ket &v, double tol) {
    require_qubits(v, "classify");
    const std::size_t n = v.num_factors();
    const DickeDecomposition dec = dicke_decompose(v);

    std::vector<cplx> c(n + 1);
    for (const auto &[k, coeff] : dec.coeffs) {
        c[k] = coeff;
    }

    const double h = 1.0 / std::numbers::sqrt2;
    struct Candidate {
        Family family;
        std::size_t k;
        SymCoeffs ref;
    };
    std::vector<Candidate> candidates;
    if (n >= 2) {
        candidates.push_back({Family::GHZ, 0, {{0, h}, {n, h}}});
        candidates.push_back({Family::W, 0, {{1, 1.0}}});
    }
    if (n >= 3) {
        candidates.push_back({Family::G, 0, {{1, h}, {n - 1, h}}});
    }
    for (std::size_t k = 2; 2 * k < n; ++k) {
        candidates.push_back({Family::GGeneral, k, {{k, h}, {n - k, h}}});
    }
    for (std::size_t k = 0; k <= n; ++k) {
        candidates.push_back({Family::Dicke, k, {{k, 1.0}}});
    }

    for (const Candidate &cand : candidates) {
        for (const bool flipped : {false, true}) {
            const double f = overlap_fidelity(cand.ref, c, flipped);
            if (f >= 1.0 - tol) {
                return ClassificationResult{cand.family, n, cand.k, flipped, f};
            }
        }
    }

    const double pf = product_fidelity(v);
    if (pf >= 1.0 - tol) {
        return ClassificationResult{Family::Product, n, 0, false, pf};
    }
    if (dec.residual < tol) {
        return ClassificationResult{Family::DickeSum, n, 0, false,
                                    1.0 - dec.residual * dec.residual};
    }
    return ClassificationResult{Family::Other, n, 0, false, 0.0};
}

bool is_g_general(const ClassificationResult &r, std::size_t n, std::size_t k) {
    if (r.n != n) {
        return false;
    }
    if (r.family == Family::GGeneral) {
        return r.k == k || r.k == n - k;
    }
    return (k == 1 || k + 1 == n) && r.family == Family::G;
}

ExpectationReport expectations(const Ket &v) {
    if (!v.all_qubits()) {
        throw PreconditionError("expectations: every factor must be a qubit");
    }
    const std::size_t n = v.num_factors();
    const std::size_t mask = v.dim() - 1;
    cplx x_sum = 0.0;
    cplx y_sum = 0.0;
    for (std::size_t x = 0; x < v.dim(); ++x) {
        const cplx term = std::conj(v[~x & mask]) * v[x];
        x_sum += term;
        y_sum += (weight(x) % 2 == 0) ? term : -term;
    }
    // Y^n |x> = i^n (-1)^{|x|} |~x>
    static constexpr cplx kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    y_sum *= kIPowers[n % 4];
    return ExpectationReport{x_sum.real(), y_sum.real(), x_sum.imag(), y_sum.imag()};
}

} // namespace qparity::states
