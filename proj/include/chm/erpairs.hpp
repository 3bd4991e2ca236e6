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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "chm/matching.hpp"
#include "chm/matrix.hpp"

namespace chm {

using SignVector = std::vector<int8_t>;

/// Two columns (or rows) a < b whose entrywise products conj(L_a)_k (L_b)_k
/// are all +1 or -1. `signs` holds those products.
struct ERPair {
    Axis axis = Axis::Columns;
    size_t a = 0;
    size_t b = 0;
    SignVector signs;

    friend bool operator==(const ERPair &, const ERPair &) = default;
};

/// Maximum numbers of ER pairs (eta_c, eta_r) and of mutually aligned ER
/// pairs (eta_c_bar, eta_r_bar). All four are equivalence invariants.
struct EtaCounts {
    size_t eta_c = 0;
    size_t eta_r = 0;
    size_t eta_c_bar = 0;
    size_t eta_r_bar = 0;

    friend bool operator==(const EtaCounts &, const EtaCounts &) = default;
};

/// Sign of a single entry product, if it is +1 or -1 (exactly for Exact
/// phases, within `tol` otherwise).
inline std::optional<int8_t> phase_sign(const Phase &p, double tol) {
    if (p.is_exact()) {
        if (p.den() == 1) return int8_t{1};
        if (p.den() == 2) return int8_t{-1};
        return std::nullopt;
    }
    auto v = p.value();
    if (std::abs(v - 1.0) <= tol) return int8_t{1};
    if (std::abs(v + 1.0) <= tol) return int8_t{-1};
    return std::nullopt;
}

/// Sign vector of the line pair (a, b), or empty if it is not an ER pair.
inline std::optional<SignVector> er_sign_vector(const CHMatrix &h, Axis axis, size_t a, size_t b,
                                                double tol = kDefaultTolerance) {
    const size_t d = h.dim();
    if (a == b || a >= d || b >= d) throw std::invalid_argument("er_sign_vector: need distinct indices below d");
    SignVector s(d);
    for (size_t k = 0; k < d; ++k) {
        auto sk = phase_sign(line_product(h, axis, a, b, k), tol);
        if (!sk) return std::nullopt;
        s[k] = *sk;
    }
    return s;
}

/// All ER pairs along `axis`, in lexicographic (a, b) order.
inline std::vector<ERPair> find_er_pairs(const CHMatrix &h, Axis axis, double tol = kDefaultTolerance) {
    std::vector<ERPair> out;
    const size_t d = h.dim();
    for (size_t a = 0; a < d; ++a) {
        for (size_t b = a + 1; b < d; ++b) {
            if (auto s = er_sign_vector(h, axis, a, b, tol)) out.push_back(ERPair{axis, a, b, std::move(*s)});
        }
    }
    return out;
}

/// The sign vector with a global sign chosen so that the first entry is +1.
/// Negating one line of a pair flips every sign, so alignment is compared
/// on this representative.
inline SignVector canonical_signs(const SignVector &s) {
    if (s.empty() || s[0] > 0) return s;
    SignVector t(s);
    for (auto &x : t) x = static_cast<int8_t>(-x);
    return t;
}

namespace detail {

inline Graph pair_graph(size_t d, const std::vector<ERPair> &pairs) {
    Graph g(d);
    for (const auto &p : pairs) g.add_edge(p.a, p.b);
    return g;
}

// (eta, eta_bar) along one axis.
inline std::pair<size_t, size_t> eta_along(const CHMatrix &h, Axis axis, double tol) {
    auto pairs = find_er_pairs(h, axis, tol);
    size_t eta = maximum_matching_size(pair_graph(h.dim(), pairs));
    std::map<SignVector, std::vector<ERPair>> classes;
    for (auto &p : pairs) classes[canonical_signs(p.signs)].push_back(p);
    size_t eta_bar = 0;
    for (const auto &[signs, members] : classes) {
        eta_bar = std::max(eta_bar, maximum_matching_size(pair_graph(h.dim(), members)));
    }
    return {eta, eta_bar};
}

}  // namespace detail

/// eta counts as maximum matchings in the ER-pair graph (all pairs, or one
/// alignment class at a time for the barred counts).
inline EtaCounts eta_counts(const CHMatrix &h, double tol = kDefaultTolerance) {
    auto [c, cb] = detail::eta_along(h, Axis::Columns, tol);
    auto [r, rb] = detail::eta_along(h, Axis::Rows, tol);
    return EtaCounts{c, r, cb, rb};
}

/// Row and column orderings that put the matrix in the block form
/// [[A, B], [A, -B]]. `apply` permutes with `permute(h, row_perm, col_perm)`
/// and then negates the target rows flagged in `negate_row` (needed when a
/// pair's sign vector is the negative of its class representative).
struct SylvesterWitness {
    std::vector<size_t> row_perm;
    std::vector<size_t> col_perm;
    std::vector<bool> negate_row;
    size_t half = 0;

    CHMatrix apply(const CHMatrix &h) const {
        CHMatrix out = permute(h, row_perm, col_perm);
        const Phase minus = Phase::exact(1, 2);
        for (size_t i = 0; i < out.dim(); ++i) {
            if (!negate_row[i]) continue;
            for (size_t j = 0; j < out.dim(); ++j) out(i, j) = out(i, j) * minus;
        }
        return out;
    }
};

/// Checks the [[A, B], [A, -B]] shape of an already permuted matrix.
inline bool has_sylvester_blocks(const CHMatrix &m, double tol = kDefaultTolerance) {
    const size_t d = m.dim();
    if (d % 2 != 0) return false;
    const size_t h = d / 2;
    const Phase minus = Phase::exact(1, 2);
    for (size_t i = 0; i < h; ++i) {
        for (size_t j = 0; j < d; ++j) {
            Phase expect = j < h ? m(i, j) : m(i, j) * minus;
            const Phase &got = m(i + h, j);
            if (expect.is_exact() && got.is_exact()) {
                if (!(expect == got)) return false;
            } else if (angle_distance(expect.angle(), got.angle()) > tol) {
                return false;
            }
        }
    }
    return true;
}

/// If eta_c_bar = eta_r_bar = d/2, returns permutations exhibiting the block
/// form [[A, B], [A, -B]]; otherwise empty.
///
/// The witness comes from a perfect matching inside one alignment class of
/// row pairs sharing the sign vector s (up to a global sign). For each pair
/// (a, b) row a goes to the top half and row b, negated if its product with
/// row a is -s, to the bottom half; columns with s = +1 go left and s = -1
/// go right.
inline std::optional<SylvesterWitness> sylvester_detect(const CHMatrix &h, double tol = kDefaultTolerance) {
    const size_t d = h.dim();
    if (d % 2 != 0) return std::nullopt;
    EtaCounts eta = eta_counts(h, tol);
    if (eta.eta_c_bar != d / 2 || eta.eta_r_bar != d / 2) return std::nullopt;

    std::map<SignVector, std::vector<ERPair>> classes;
    for (auto &p : find_er_pairs(h, Axis::Rows, tol)) classes[canonical_signs(p.signs)].push_back(p);
    for (const auto &[signs, members] : classes) {
        Graph g = detail::pair_graph(d, members);
        if (maximum_matching_size(g) != d / 2) continue;
        size_t plus = static_cast<size_t>(std::count(signs.begin(), signs.end(), int8_t{1}));
        if (plus != d / 2) continue;

        std::optional<SylvesterWitness> found;
        for_each_perfect_matching(g, [&](const Matching &m) {
            SylvesterWitness w;
            w.half = d / 2;
            w.row_perm.assign(d, 0);
            w.col_perm.assign(d, 0);
            w.negate_row.assign(d, false);
            for (size_t k = 0; k < m.size(); ++k) {
                auto [a, b] = m[k];
                auto s = er_sign_vector(h, Axis::Rows, a, b, tol);
                w.row_perm[a] = k;
                w.row_perm[b] = k + d / 2;
                w.negate_row[k + d / 2] = (*s)[0] != signs[0];
            }
            size_t left = 0, right = d / 2;
            for (size_t j = 0; j < d; ++j) w.col_perm[j] = signs[j] > 0 ? left++ : right++;
            if (has_sylvester_blocks(w.apply(h), tol)) {
                found = std::move(w);
                return false;
            }
            return true;
        });
        if (found) return found;
    }
    return std::nullopt;
}

/// Applies `trials` random equivalence moves (seeded), dephases, and checks
/// that the eta counts never change.
inline bool eta_equivalence_probe(const CHMatrix &h, size_t trials, uint64_t seed, double tol = kDefaultTolerance) {
    if (trials < 1) throw std::invalid_argument("eta_equivalence_probe: trials must be >= 1");
    std::mt19937_64 rng(seed);
    const EtaCounts reference = eta_counts(h, tol);
    const bool exact = h.is_exact();
    for (size_t t = 0; t < trials; ++t) {
        CHMatrix moved = dephase(random_move(h.dim(), rng, exact).apply(h));
        if (!(eta_counts(moved, tol) == reference)) return false;
    }
    return true;
}

}  // namespace chm
