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

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "chm/matrix.hpp"
#include "chm/modular.hpp"

namespace chm {

enum class DefectMethod { Auto, ExactRational, FloatSVD };

inline const char *defect_method_name(DefectMethod m) {
    switch (m) {
        case DefectMethod::ExactRational:
            return "exact";
        case DefectMethod::FloatSVD:
            return "float";
        default:
            return "auto";
    }
}

inline DefectMethod parse_defect_method(const std::string &s) {
    if (s == "auto") return DefectMethod::Auto;
    if (s == "exact") return DefectMethod::ExactRational;
    if (s == "float") return DefectMethod::FloatSVD;
    throw std::invalid_argument("unknown defect method '" + s + "' (auto|exact|float)");
}

/// Nullity of the real linear system
///   sum_k H_ik conj(H_jk) (R_ik - R_jk) = 0,  0 <= i < j < d,
/// in the unknowns R_ik, i, k >= 1 (row 0 and column 0 of R fixed to zero).
/// The defect bounds the dimension of any smooth family through H from
/// above; a zero defect does not by itself make H isolated, hence
/// `upper_bound_only` is always set.
struct DefectReport {
    size_t defect = 0;
    size_t system_rows = 0;  // real rows: two per complex equation
    size_t system_cols = 0;  // (d - 1)^2 unknowns
    size_t rank = 0;
    DefectMethod method = DefectMethod::Auto;
    bool upper_bound_only = true;
    size_t primes_used = 0;  // exact path only
};

/// Default relative singular value cutoff of the float path.
inline constexpr double kDefectSvdCutoff = 1e-8;

namespace detail {

// Coefficient of one unknown in one complex equation, as a power of a root
// of unity (exponent over the lattice 2 pi / L) or as a float phase.
struct DefectTerm {
    size_t col;
    Phase value;
};

inline std::vector<std::vector<DefectTerm>> defect_equations(const CHMatrix &h) {
    const size_t d = h.dim();
    const size_t n = d - 1;
    std::vector<std::vector<DefectTerm>> eqs;
    const Phase minus = Phase::exact(1, 2);
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = i + 1; j < d; ++j) {
            std::vector<DefectTerm> eq;
            for (size_t k = 1; k < d; ++k) {
                Phase c = h(i, k) * h(j, k).conj();
                if (i >= 1) eq.push_back({(i - 1) * n + (k - 1), c});
                eq.push_back({(j - 1) * n + (k - 1), c * minus});
            }
            eqs.push_back(std::move(eq));
        }
    }
    return eqs;
}

inline size_t euler_phi(uint64_t n) {
    size_t r = n;
    for (uint64_t p : modular::prime_factors(n)) r = r / p * (p - 1);
    return r;
}

// Rank over Q(zeta_L) of [A; conj(A)], which equals the real rank of
// [Re A; Im A]. Computed modulo primes p = 1 (mod L), each mapping zeta_L to
// a primitive L-th root mod p; the reduction never raises the rank, and once
// the product of primes exceeds the norm bound of every nonzero r x r minor
// the largest rank seen is the true one.
inline size_t exact_real_rank(const std::vector<std::vector<DefectTerm>> &eqs, size_t cols, int64_t L,
                              size_t max_row_terms, size_t &primes_used) {
    const size_t rows = 2 * eqs.size();
    primes_used = 0;
    if (rows == 0 || cols == 0) return 0;
    const size_t full = std::min(rows, cols);
    // Hadamard bound: |det| <= (sqrt(max_row_terms))^r per embedding.
    const double bound_bits = static_cast<double>(euler_phi(static_cast<uint64_t>(L))) *
                              static_cast<double>(full) * 0.5 * std::log2(static_cast<double>(max_row_terms));
    size_t best = 0;
    double bits = 0.0;
    uint64_t below = uint64_t{1} << 62;
    while (true) {
        const uint64_t p = modular::next_prime_one_mod(static_cast<uint64_t>(L), below);
        below = p;
        const modular::Montgomery mg(p);
        const uint64_t g = mg.to(modular::primitive_root_of_unity(static_cast<uint64_t>(L), p));
        std::vector<uint64_t> zeta(static_cast<size_t>(L));
        zeta[0] = mg.to(1);
        for (size_t e = 1; e < zeta.size(); ++e) zeta[e] = mg.mul(zeta[e - 1], g);

        std::vector<uint64_t> a(rows * cols, 0);
        for (size_t r = 0; r < eqs.size(); ++r) {
            for (const auto &t : eqs[r]) {
                const int64_t e = t.value.num() * (L / t.value.den());
                const int64_t ce = (L - e) % L;
                uint64_t &x = a[r * cols + t.col];
                uint64_t &y = a[(eqs.size() + r) * cols + t.col];
                x = x + zeta[static_cast<size_t>(e)];
                if (x >= p) x -= p;
                y = y + zeta[static_cast<size_t>(ce)];
                if (y >= p) y -= p;
            }
        }
        best = std::max(best, modular::rank_mod(a, rows, cols, mg));
        ++primes_used;
        bits += std::log2(static_cast<double>(p));
        if (best == full || bits > bound_bits) return best;
    }
}

inline size_t float_real_rank(const std::vector<std::vector<DefectTerm>> &eqs, size_t cols, double cutoff) {
    const size_t m = eqs.size();
    if (m == 0 || cols == 0) return 0;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(2 * m), static_cast<Eigen::Index>(cols));
    for (size_t r = 0; r < m; ++r) {
        for (const auto &t : eqs[r]) {
            std::complex<double> v = t.value.value();
            a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(t.col)) += v.real();
            a(static_cast<Eigen::Index>(m + r), static_cast<Eigen::Index>(t.col)) += v.imag();
        }
    }
    Eigen::BDCSVD<Eigen::MatrixXd> svd(a);
    const auto &s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0) return 0;
    size_t rank = 0;
    for (Eigen::Index k = 0; k < s.size(); ++k)
        if (s(k) > cutoff * s(0)) ++rank;
    return rank;
}

}  // namespace detail

/// Defect of a complex Hadamard matrix. `Auto` takes the exact path when all
/// phases are Exact with a common denominator of at most 360.
inline DefectReport defect(const CHMatrix &h, DefectMethod method = DefectMethod::Auto,
                           double tol = kDefaultTolerance, double cutoff = kDefectSvdCutoff) {
    if (!is_hadamard(h, tol)) throw std::invalid_argument("defect: input is not a complex Hadamard matrix");
    const size_t d = h.dim();
    DefectReport rep;
    rep.system_cols = (d - 1) * (d - 1);
    rep.system_rows = d * (d - 1);

    auto L = h.common_denominator();
    if (method == DefectMethod::ExactRational && !L) {
        throw std::invalid_argument("defect: exact method needs Exact phases with common denominator <= " +
                                    std::to_string(kMaxExactDenominator));
    }
    if (method == DefectMethod::Auto) method = L ? DefectMethod::ExactRational : DefectMethod::FloatSVD;
    rep.method = method;

    const auto eqs = detail::defect_equations(h);
    if (method == DefectMethod::ExactRational) {
        // Coefficients are +-zeta_L^e; negation needs an even lattice.
        const int64_t lattice = std::lcm(*L, int64_t{2});
        const size_t max_terms = d <= 1 ? 1 : 2 * (d - 1);
        rep.rank = detail::exact_real_rank(eqs, rep.system_cols, lattice, max_terms, rep.primes_used);
    } else {
        rep.rank = detail::float_real_rank(eqs, rep.system_cols, cutoff);
    }
    rep.defect = rep.system_cols - rep.rank;
    return rep;
}

}  // namespace chm
