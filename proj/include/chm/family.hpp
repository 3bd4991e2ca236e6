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
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chm/erpairs.hpp"
#include "chm/integer_rank.hpp"
#include "chm/matching.hpp"
#include "chm/matrix.hpp"

namespace chm {

/// Integer coefficients of one family parameter in the phase exponent of
/// every entry: H(xi)_{ij} = H_{ij} exp(i sum_p coeffs_p[i][j] xi_p).
struct ParamPattern {
    std::string name;
    size_t d = 0;
    std::vector<int> coeffs;  // row-major, d*d

    ParamPattern() = default;
    ParamPattern(std::string n, size_t dim) : name(std::move(n)), d(dim), coeffs(dim * dim, 0) {}

    int operator()(size_t i, size_t j) const { return coeffs[i * d + j]; }
    int &operator()(size_t i, size_t j) { return coeffs[i * d + j]; }

    /// Coefficient addressed along an axis, as in CHMatrix::along.
    int along(Axis axis, size_t line, size_t k) const {
        return axis == Axis::Columns ? (*this)(k, line) : (*this)(line, k);
    }

    ParamPattern transpose() const {
        ParamPattern t(name, d);
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const ParamPattern &, const ParamPattern &) = default;
};

/// A base matrix and the parameter patterns of an affine family over it.
struct AffineFamily {
    CHMatrix base;
    std::vector<ParamPattern> params;

    size_t dim() const { return base.dim(); }
    size_t size() const { return params.size(); }

    friend bool operator==(const AffineFamily &, const AffineFamily &) = default;
};

/// Raised when a line pair cannot carry a new parameter. `entry` is the
/// index along the pair where the condition breaks.
class InjectionError : public std::runtime_error {
   public:
    InjectionError(const std::string &what, size_t entry) : std::runtime_error(what), entry_(entry) {}
    size_t entry() const { return entry_; }

   private:
    size_t entry_;
};

/// "a".."z", then "p26", "p27", ...
inline std::string default_param_name(size_t k) {
    if (k < 26) return std::string(1, static_cast<char>('a' + k));
    return "p" + std::to_string(k);
}

inline AffineFamily transpose(const AffineFamily &f) {
    AffineFamily t{f.base.transpose(), {}};
    for (const auto &p : f.params) t.params.push_back(p.transpose());
    return t;
}

/// Why the line pair (a, b) is not an ER pair of the family, if it is not.
/// The pair must be ER in the base and every existing pattern must carry
/// identical coefficients on both lines, so the entry products stay +-1 for
/// all parameter values.
struct InjectionObstacle {
    size_t entry;
    std::string reason;
};

inline std::optional<InjectionObstacle> injection_obstacle(const AffineFamily &f, Axis axis, size_t a, size_t b,
                                                           double tol = kDefaultTolerance) {
    const size_t d = f.dim();
    if (a == b || a >= d || b >= d) throw std::invalid_argument("line pair needs two distinct indices below d");
    for (size_t k = 0; k < d; ++k) {
        if (!phase_sign(line_product(f.base, axis, a, b, k), tol)) {
            return InjectionObstacle{k, "not ER: entry product at index " + std::to_string(k) + " is not +-1"};
        }
    }
    for (const auto &p : f.params) {
        for (size_t k = 0; k < d; ++k) {
            if (p.along(axis, a, k) != p.along(axis, b, k)) {
                return InjectionObstacle{k, "not ER in family: parameter '" + p.name +
                                                "' has different coefficients at index " + std::to_string(k)};
            }
        }
    }
    return std::nullopt;
}

/// Adds one parameter on the line pair (a, b): coefficient 1 exactly at the
/// entries of both lines whose sign in the pair's sign vector is -1.
inline AffineFamily inject_pair(const AffineFamily &f, Axis axis, size_t a, size_t b, const std::string &name,
                                double tol = kDefaultTolerance) {
    for (const auto &p : f.params) {
        if (p.name == name) throw std::invalid_argument("duplicate parameter name '" + name + "'");
    }
    if (auto obstacle = injection_obstacle(f, axis, a, b, tol)) {
        throw InjectionError(std::string(axis_name(axis)) + " (" + std::to_string(a) + "," + std::to_string(b) +
                                 ") " + obstacle->reason,
                             obstacle->entry);
    }
    const size_t d = f.dim();
    ParamPattern p(name, d);
    for (size_t k = 0; k < d; ++k) {
        if (*phase_sign(line_product(f.base, axis, a, b, k), tol) < 0) {
            if (axis == Axis::Columns) {
                p(k, a) = p(k, b) = 1;
            } else {
                p(a, k) = p(b, k) = 1;
            }
        }
    }
    AffineFamily out = f;
    out.params.push_back(std::move(p));
    return out;
}

inline AffineFamily inject_pair(const AffineFamily &f, const ERPair &pair, const std::string &name,
                                double tol = kDefaultTolerance) {
    return inject_pair(f, pair.axis, pair.a, pair.b, name, tol);
}

using IndexPairs = std::vector<std::pair<size_t, size_t>>;

/// Injects all row pairs, then all column pairs, naming parameters a, b, ...
inline AffineFamily build_family(const CHMatrix &h, const IndexPairs &row_pairs, const IndexPairs &col_pairs,
                                 double tol = kDefaultTolerance) {
    AffineFamily f{h, {}};
    auto stage = [&](Axis axis, const IndexPairs &pairs) {
        for (auto [a, b] : pairs) {
            try {
                f = inject_pair(f, axis, a, b, default_param_name(f.size()), tol);
            } catch (const InjectionError &e) {
                throw InjectionError(std::string("build_family: pair failed: ") + e.what(), e.entry());
            }
        }
    };
    stage(Axis::Rows, row_pairs);
    stage(Axis::Columns, col_pairs);
    return f;
}

/// Patterns with the dephasing gauge removed:
/// P'[i][j] = P[i][j] - P[i][0] - P[0][j] + P[0][0].
inline std::vector<std::vector<int64_t>> gauge_fixed_patterns(const AffineFamily &f) {
    const size_t d = f.dim();
    std::vector<std::vector<int64_t>> rows;
    for (const auto &p : f.params) {
        std::vector<int64_t> v(d * d);
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j)
                v[i * d + j] = int64_t{p(i, j)} - p(i, 0) - p(0, j) + p(0, 0);
        rows.push_back(std::move(v));
    }
    return rows;
}

/// Number of independent parameters after dephasing (rational rank of the
/// gauge-fixed patterns).
inline size_t param_rank(const AffineFamily &f) { return rational_rank(gauge_fixed_patterns(f)); }

/// Family member at xi given as phases e^{i xi_p}. With Exact phases (xi_p a
/// rational multiple of 2 pi) and an Exact base the result is Exact.
inline CHMatrix sample(const AffineFamily &f, std::span<const Phase> xi) {
    if (xi.size() != f.size()) throw std::invalid_argument("sample: xi length does not match parameter count");
    const size_t d = f.dim();
    CHMatrix out = f.base;
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < d; ++j) {
            for (size_t p = 0; p < xi.size(); ++p) {
                int c = f.params[p](i, j);
                if (c != 0) out(i, j) *= xi[p].pow(c);
            }
        }
    }
    return out;
}

/// Family member at real xi (radians). Entries whose total exponent is
/// exactly zero keep the base phase unchanged, so xi = 0 returns the base.
inline CHMatrix sample(const AffineFamily &f, std::span<const double> xi) {
    if (xi.size() != f.size()) throw std::invalid_argument("sample: xi length does not match parameter count");
    const size_t d = f.dim();
    CHMatrix out = f.base;
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < d; ++j) {
            double angle = 0.0;
            for (size_t p = 0; p < xi.size(); ++p) angle += f.params[p](i, j) * xi[p];
            if (angle != 0.0) out(i, j) = out(i, j) * Phase::radians(angle);
        }
    }
    return out;
}

/// Checks orthogonality of every column pair for all parameter values at
/// once. The inner product of columns a and b is a sum of terms
/// conj(H_ka) H_kb exp(i (c_kb - c_ka) . xi); grouping terms by the integer
/// vector c_kb - c_ka, the sum vanishes identically iff every group's
/// constant part vanishes. Exact bases are checked exactly; others within
/// tol * d per group.
inline bool verify_exact(const AffineFamily &f, double tol = kDefaultTolerance) {
    const size_t d = f.dim();
    const size_t m = f.size();
    auto L = f.base.common_denominator();
    for (size_t a = 0; a < d; ++a) {
        for (size_t b = a + 1; b < d; ++b) {
            std::map<std::vector<int>, std::vector<int64_t>> exact_groups;
            std::map<std::vector<int>, std::complex<double>> float_groups;
            for (size_t k = 0; k < d; ++k) {
                std::vector<int> key(m);
                for (size_t p = 0; p < m; ++p) key[p] = f.params[p](k, b) - f.params[p](k, a);
                Phase term = line_product(f.base, Axis::Columns, a, b, k);
                if (L) {
                    auto &counts = exact_groups[key];
                    counts.resize(static_cast<size_t>(*L));
                    counts[static_cast<size_t>(term.num() * (*L / term.den()))] += 1;
                } else {
                    float_groups[key] += term.value();
                }
            }
            for (auto &[key, counts] : exact_groups) {
                if (!root_of_unity_sum_is_zero(counts)) return false;
            }
            for (auto &[key, sum] : float_groups) {
                if (std::abs(sum) > tol * static_cast<double>(d)) return false;
            }
        }
    }
    return true;
}

/// The (d/2 - 1)-parameter Fourier family for even d: parameter p sits on
/// odd rows i >= 1 at every column j with j mod (d/2) = p + 1. Equivalent to
/// injecting the aligned column pairs (k, k + d/2), k = 1..d/2-1.
inline AffineFamily fourier_family_even(size_t d) {
    if (d < 2 || d % 2 != 0) {
        throw std::invalid_argument("fourier_family_even: d must be even; in odd d no parameter can live on two lines");
    }
    const size_t half = d / 2;
    AffineFamily f{fourier(d), {}};
    for (size_t p = 0; p + 1 < half; ++p) {
        ParamPattern pat(default_param_name(p), d);
        for (size_t i = 1; i < d; i += 2)
            for (size_t j = 0; j < d; ++j)
                if (j % half == p + 1) pat(i, j) = 1;
        f.params.push_back(std::move(pat));
    }
    return f;
}

/// Row-and-column Fourier family for d = 4k, k > 1: the column patterns of
/// fourier_family_even followed by their transposes. Raw size d - 2; one
/// parameter of each half turns out dependent after dephasing.
inline AffineFamily fourier_family_doubly_even(size_t d) {
    if (d < 8 || d % 4 != 0) throw std::invalid_argument("fourier_family_doubly_even: d must be a multiple of 4, d >= 8");
    AffineFamily f = fourier_family_even(d);
    const size_t n = f.size();
    for (size_t p = 0; p < n; ++p) {
        ParamPattern t = f.params[p].transpose();
        t.name = default_param_name(n + p);
        f.params.push_back(std::move(t));
    }
    return f;
}

/// Graph of line pairs along `axis` that can carry a new parameter in `f`.
inline Graph valid_pair_graph(const AffineFamily &f, Axis axis, double tol = kDefaultTolerance) {
    const size_t d = f.dim();
    Graph g(d);
    for (size_t a = 0; a < d; ++a)
        for (size_t b = a + 1; b < d; ++b)
            if (!injection_obstacle(f, axis, a, b, tol)) g.add_edge(a, b);
    return g;
}

/// Visits every perfect matching of the lines along `axis` into pairs that
/// are valid in the family context `f` (an empty family means: ER pairs of
/// the base). Pairs inside one matching are disjoint, and a pattern injected
/// on one pair is zero on the lines of the others, so validity against `f`
/// alone decides the whole matching. Returns the count.
inline uint64_t enumerate_matchings(const AffineFamily &f, Axis axis,
                                    const std::function<bool(const Matching &)> &visit,
                                    double tol = kDefaultTolerance) {
    return for_each_perfect_matching(valid_pair_graph(f, axis, tol), visit);
}

inline uint64_t count_matchings(const AffineFamily &f, Axis axis, double tol = kDefaultTolerance) {
    return count_perfect_matchings(valid_pair_graph(f, axis, tol));
}

inline uint64_t count_matchings(const CHMatrix &h, Axis axis, double tol = kDefaultTolerance) {
    return count_matchings(AffineFamily{h, {}}, axis, tol);
}

/// Rows-then-columns choice count: for every perfect matching of the rows
/// into ER pairs, the number of maximum-cardinality column matchings valid in
/// the resulting row family (the empty matching counts once when no column
/// pair survives).
struct CombinedChoices {
    uint64_t row_matchings = 0;
    uint64_t combined = 0;
};

inline CombinedChoices count_combined_choices(const CHMatrix &h, double tol = kDefaultTolerance) {
    CombinedChoices out;
    AffineFamily empty{h, {}};
    out.row_matchings = enumerate_matchings(
        empty, Axis::Rows,
        [&](const Matching &rows) {
            AffineFamily rf = empty;
            for (auto [a, b] : rows) rf = inject_pair(rf, Axis::Rows, a, b, default_param_name(rf.size()), tol);
            out.combined += maximum_matchings(valid_pair_graph(rf, Axis::Columns, tol)).size();
            return true;
        },
        tol);
    return out;
}

}  // namespace chm
