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
 * Permutation-symmetric qubit states prepared by the parity module (GHZ, W,
 * Dicke, G_n, G_{n,k}), their Dicke-basis decomposition and classification.
 */
#pragma once

#include "qparity/linalg.hpp"

#include <cstddef>
#include <map>
#include <string>

namespace qparity::states {

/// D_{n,k}: uniform superposition of the C(n,k) weight-k strings.
Ket dicke(std::size_t n, std::size_t k);
Ket ghz(std::size_t n);
Ket w(std::size_t n);
/// (W_n + X^n W_n)/sqrt2
Ket g(std::size_t n);
/// (D_{n,k} + X^n D_{n,k})/sqrt2, and D_{2k,k} in the self-dual case n = 2k.
Ket g_general(std::size_t n, std::size_t k);

/// X on every qubit. Throws DimensionError for a non-qubit factor.
Ket bitflip_all(const Ket &v);

struct DickeDecomposition {
    std::size_t n = 0;
    /// <D_{n,k}|v> after canonical_phase(v). Real for every state this library
    /// produces; stored complex so nothing is silently dropped.
    std::map<std::size_t, cplx> coeffs;
    /// Norm of the component orthogonal to the symmetric subspace.
    double residual = 0.0;

    /// Unnormalized squared weights: c_k^2 divided by the smallest
    /// nonzero c_k^2, e.g. "2:10 5:1".
    [[nodiscard]] std::string weight_form() const;
};

/// Throws PreconditionError for an unnormalized or non-qubit input.
DickeDecomposition dicke_decompose(const Ket &v, double tol = 1e-12);

/// sum_k c_k D_{n,k}
Ket dicke_span(const DickeDecomposition &decomposition);

/// Closed-form branch of |+>^n heralding parity k mod d:
/// c_{k+jd} proportional to sqrt(C(n, k+jd)). Throws ArgumentError unless
/// d >= 2 and k < d. Empty coeffs when no weight k + jd <= n exists.
DickeDecomposition predicted_branch(std::size_t n, std::size_t d, std::size_t k);

enum class Family { GHZ, W, Dicke, G, GGeneral, DickeSum, Product, Other };

struct ClassificationResult {
    Family family = Family::Other;
    std::size_t n = 0;
    /// Excitation number for Dicke and GGeneral, 0 otherwise.
    std::size_t k = 0;
    bool up_to_bitflip = false;
    double fidelity = 0.0;

    /// "GHZ", "W", "Dicke(4,2)", "G_5", "G(7,2)", ... with " [X^n]" appended
    /// when matched after a global bit flip.
    [[nodiscard]] std::string label() const;
    /// Same as label() without the bit-flip suffix.
    [[nodiscard]] std::string family_name() const;
};

/// Matches GHZ, W, G_n, G_{n,k} (n != 2k), Dicke in that order, each first as
/// given and then after bitflip_all; then Product, then DickeSum (residual <
/// tol), else Other. Named families need fidelity >= 1 - tol.
ClassificationResult classify(const Ket &v, double tol = kFidelityTol);

/// True for G(n,k) (equivalently G(n,n-k)), and for G_n when k is 1 or n-1.
bool is_g_general(const ClassificationResult &r, std::size_t n, std::size_t k);

struct ExpectationReport {
    double x_all = 0.0;
    double y_all = 0.0;
    double x_imag = 0.0;
    double y_imag = 0.0;
};

/// <X^n> and <Y^n>. Throws PreconditionError for a non-qubit input.
ExpectationReport expectations(const Ket &v);

} // namespace qparity::states
