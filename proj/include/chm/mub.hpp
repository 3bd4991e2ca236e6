// Copyright 2026 The CHM Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "chm/erpairs.hpp"
#include "chm/matrix.hpp"

namespace chm {

/// Columns of H1 and H2 (each of norm sqrt(d)) are mutually unbiased:
/// every entry of H1^dagger H2 has modulus sqrt(d) within tol * sqrt(d).
inline bool is_mu_pair(const CHMatrix &h1, const CHMatrix &h2, double tol = kDefaultTolerance) {
    const size_t d = h1.dim();
    if (h2.dim() != d) throw std::invalid_argument("is_mu_pair: dimension mismatch");
    const auto a = h1.to_complex();
    const auto b = h2.to_complex();
    const double root = std::sqrt(static_cast<double>(d));
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < d; ++j) {
            std::complex<double> s = 0;
            for (size_t k = 0; k < d; ++k) s += std::conj(a[k * d + i]) * b[k * d + j];
            if (std::abs(std::abs(s) - root) > tol * root) return false;
        }
    }
    return true;
}

/// Result of screening candidate bases in dimension six. Any Hadamard matrix
/// with an ER pair of rows or columns cannot sit in a set of four MU bases
/// together with the identity, so a nonempty `obstruction_hit` rules the
/// set out.
struct MubReport {
    std::vector<std::vector<bool>> pairwise_mu;
    std::vector<EtaCounts> eta;
    std::vector<bool> eta_zero;
    std::vector<size_t> obstruction_hit;
};

inline MubReport mub6_obstruction(const std::vector<CHMatrix> &set, double tol = kDefaultTolerance) {
    for (const auto &h : set) {
        if (h.dim() != 6) throw std::invalid_argument("mub6_obstruction: every matrix must be 6x6");
        if (!is_hadamard(h, tol)) throw std::invalid_argument("mub6_obstruction: input is not complex Hadamard");
    }
    MubReport rep;
    const size_t n = set.size();
    rep.pairwise_mu.assign(n, std::vector<bool>(n, false));
    for (size_t a = 0; a < n; ++a) {
        for (size_t b = a; b < n; ++b) {
            bool mu = is_mu_pair(set[a], set[b], tol);
            rep.pairwise_mu[a][b] = rep.pairwise_mu[b][a] = mu;
        }
    }
    for (size_t k = 0; k < n; ++k) {
        EtaCounts e = eta_counts(dephase(set[k]), tol);
        rep.eta.push_back(e);
        bool zero = e.eta_c == 0 && e.eta_r == 0;
        rep.eta_zero.push_back(zero);
        if (!zero) rep.obstruction_hit.push_back(k);
    }
    return rep;
}

}  // namespace chm
