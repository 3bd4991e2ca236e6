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

#include <complex>
#include <cstddef>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "chm/cyclotomic.hpp"
#include "chm/phase.hpp"

namespace chm {

inline constexpr double kDefaultTolerance = 1e-9;

/// Which index of a matrix a pair of lines refers to.
enum class Axis { Columns, Rows };

inline const char *axis_name(Axis axis) { return axis == Axis::Columns ? "columns" : "rows"; }

/// A d x d matrix of unimodular entries, row-major. Hadamardness is a
/// property to be checked (is_hadamard), not an invariant of the type.
class CHMatrix {
   public:
    CHMatrix() = default;
    explicit CHMatrix(size_t d) : d_(d), entries_(d * d) {
        if (d == 0) throw std::invalid_argument("matrix dimension must be positive");
    }
    CHMatrix(size_t d, std::vector<Phase> entries) : d_(d), entries_(std::move(entries)) {
        if (d == 0) throw std::invalid_argument("matrix dimension must be positive");
        if (entries_.size() != d * d) throw std::invalid_argument("entry count does not match dimension");
    }

    size_t dim() const { return d_; }

    const Phase &operator()(size_t i, size_t j) const { return entries_[i * d_ + j]; }
    Phase &operator()(size_t i, size_t j) { return entries_[i * d_ + j]; }

    /// Entry addressed along an axis: for Columns, line `line` is column `line`
    /// and `k` is the row; for Rows the roles swap.
    const Phase &along(Axis axis, size_t line, size_t k) const {
        return axis == Axis::Columns ? (*this)(k, line) : (*this)(line, k);
    }

    const std::vector<Phase> &entries() const { return entries_; }

    bool is_exact() const {
        for (const auto &p : entries_) {
            if (!p.is_exact()) return false;
        }
        return true;
    }

    /// lcm of all denominators when every entry is Exact and the lcm does not
    /// exceed `cap`; otherwise empty.
    std::optional<int64_t> common_denominator(int64_t cap = kMaxExactDenominator) const {
        int64_t l = 1;
        for (const auto &p : entries_) {
            if (!p.is_exact()) return std::nullopt;
            l = checked_lcm(l, p.den());
            if (l > cap) return std::nullopt;
        }
        return l;
    }

    CHMatrix transpose() const {
        CHMatrix t(d_);
        for (size_t i = 0; i < d_; ++i)
            for (size_t j = 0; j < d_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<std::complex<double>> to_complex() const {
        std::vector<std::complex<double>> out;
        out.reserve(entries_.size());
        for (const auto &p : entries_) out.push_back(p.value());
        return out;
    }

    friend bool operator==(const CHMatrix &, const CHMatrix &) = default;

   private:
    size_t d_ = 0;
    std::vector<Phase> entries_;
};

/// Entrywise product of two phases along a line pair: conj(A_k) * B_k.
inline Phase line_product(const CHMatrix &h, Axis axis, size_t a, size_t b, size_t k) {
    return h.along(axis, a, k).conj() * h.along(axis, b, k);
}

/// The Fourier matrix, entry (j,k) = e^{2 pi i jk/d}.
inline CHMatrix fourier(size_t d) {
    if (d == 0) throw std::invalid_argument("fourier: dimension must be at least 1");
    CHMatrix f(d);
    for (size_t j = 0; j < d; ++j)
        for (size_t k = 0; k < d; ++k)
            f(j, k) = Phase::exact(static_cast<int64_t>((j * k) % d), static_cast<int64_t>(d));
    return f;
}

/// Kronecker product a (x) b.
inline CHMatrix kron(const CHMatrix &a, const CHMatrix &b) {
    size_t m = a.dim(), n = b.dim();
    CHMatrix out(m * n);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t k = 0; k < n; ++k)
                for (size_t l = 0; l < n; ++l) out(i * n + k, j * n + l) = a(i, j) * b(k, l);
    return out;
}

/// D1 H D2 with row 0 and column 0 set to 1:
/// H'_{ij} = H_{ij} conj(H_{0j}) conj(H_{i0}) H_{00}.
inline CHMatrix dephase(const CHMatrix &h) {
    size_t d = h.dim();
    CHMatrix out(d);
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < d; ++j) {
            if (i == 0 || j == 0) {
                out(i, j) = Phase::one();
                continue;
            }
            out(i, j) = h(i, j) * h(0, j).conj() * h(i, 0).conj() * h(0, 0);
        }
    }
    return out;
}

/// Row- and column-permuted copy: out(row_perm[i], col_perm[j]) = h(i, j).
inline CHMatrix permute(const CHMatrix &h, const std::vector<size_t> &row_perm, const std::vector<size_t> &col_perm) {
    size_t d = h.dim();
    if (row_perm.size() != d || col_perm.size() != d) throw std::invalid_argument("permutation length mismatch");
    std::vector<bool> seen_r(d), seen_c(d);
    for (size_t i = 0; i < d; ++i) {
        if (row_perm[i] >= d || seen_r[row_perm[i]] || col_perm[i] >= d || seen_c[col_perm[i]])
            throw std::invalid_argument("not a permutation");
        seen_r[row_perm[i]] = seen_c[col_perm[i]] = true;
    }
    CHMatrix out(d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) out(row_perm[i], col_perm[j]) = h(i, j);
    return out;
}

/// A recorded equivalence move H -> D1 P1 H P2 D2. Permutations use the
/// convention of `permute`; phases are applied after permuting.
struct EquivalenceMove {
    std::vector<size_t> row_perm;
    std::vector<size_t> col_perm;
    std::vector<Phase> row_phases;
    std::vector<Phase> col_phases;

    CHMatrix apply(const CHMatrix &h) const {
        CHMatrix out = permute(h, row_perm, col_perm);
        size_t d = h.dim();
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) out(i, j) = row_phases[i] * out(i, j) * col_phases[j];
        return out;
    }
};

/// Uniform-ish integer in [0, n) from a 64-bit engine. Plain modulo keeps the
/// stream identical across standard library implementations.
inline size_t draw_index(std::mt19937_64 &rng, size_t n) { return static_cast<size_t>(rng() % n); }

/// Random equivalence move of size d. Exact moves draw phases e^{2 pi i k/m}
/// with m <= 24 so exact matrices stay exact; otherwise angles are uniform.
inline EquivalenceMove random_move(size_t d, std::mt19937_64 &rng, bool exact = true) {
    EquivalenceMove mv;
    auto shuffled = [&] {
        std::vector<size_t> p(d);
        for (size_t i = 0; i < d; ++i) p[i] = i;
        for (size_t i = d; i > 1; --i) std::swap(p[i - 1], p[draw_index(rng, i)]);
        return p;
    };
    auto phase = [&] {
        if (exact) {
            int64_t m = static_cast<int64_t>(1 + draw_index(rng, 24));
            return Phase::exact(static_cast<int64_t>(draw_index(rng, static_cast<size_t>(m))), m);
        }
        return Phase::radians(kTwoPi * static_cast<double>(rng() >> 11) * 0x1.0p-53);
    };
    mv.row_perm = shuffled();
    mv.col_perm = shuffled();
    for (size_t i = 0; i < d; ++i) mv.row_phases.push_back(phase());
    for (size_t i = 0; i < d; ++i) mv.col_phases.push_back(phase());
    return mv;
}

/// Orthogonality of all column pairs: |<C_i, C_j>| <= tol * d for i < j.
///
/// When every entry is Exact with common denominator L <= 360 the test is
/// exact (each inner product is a sum of L-th roots of unity checked against
/// the cyclotomic polynomial) and `tol` is unused.
inline bool is_hadamard(const CHMatrix &h, double tol = kDefaultTolerance) {
    if (!(tol > 0)) throw std::invalid_argument("is_hadamard: tolerance must be positive");
    size_t d = h.dim();
    if (auto L = h.common_denominator()) {
        std::vector<int64_t> counts(static_cast<size_t>(*L));
        for (size_t a = 0; a < d; ++a) {
            for (size_t b = a + 1; b < d; ++b) {
                std::fill(counts.begin(), counts.end(), 0);
                for (size_t k = 0; k < d; ++k) {
                    Phase p = line_product(h, Axis::Columns, a, b, k);
                    counts[static_cast<size_t>(p.num() * (*L / p.den()))] += 1;
                }
                if (!root_of_unity_sum_is_zero(counts)) return false;
            }
        }
        return true;
    }
    auto c = h.to_complex();
    for (size_t a = 0; a < d; ++a) {
        for (size_t b = a + 1; b < d; ++b) {
            std::complex<double> s = 0;
            for (size_t k = 0; k < d; ++k) s += std::conj(c[k * d + a]) * c[k * d + b];
            if (std::abs(s) > tol * static_cast<double>(d)) return false;
        }
    }
    return true;
}

/// Entrywise comparison with angular tolerance; Exact pairs compare exactly.
inline bool approx_equal(const CHMatrix &a, const CHMatrix &b, double tol = kDefaultTolerance) {
    if (a.dim() != b.dim()) return false;
    for (size_t i = 0; i < a.entries().size(); ++i) {
        const Phase &x = a.entries()[i];
        const Phase &y = b.entries()[i];
        if (x.is_exact() && y.is_exact()) {
            if (!(x == y)) return false;
        } else if (angle_distance(x.angle(), y.angle()) > tol) {
            return false;
        }
    }
    return true;
}

}  // namespace chm
