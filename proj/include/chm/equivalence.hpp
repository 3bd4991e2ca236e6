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
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "chm/erpairs.hpp"
#include "chm/matrix.hpp"

namespace chm {

/// Equivalence invariants of a matrix. Equal fingerprints are necessary, not
/// sufficient, for equivalence.
///
/// `cycles` holds, for every 2x2 submatrix (rows i < k, columns j < l), the
/// angle of H_ij H_kl conj(H_il) conj(H_kj) folded into [0, pi]. Diagonal
/// phases cancel in the product, and a permutation either keeps a
/// submatrix's orientation or conjugates its cycle, which folding absorbs.
struct Fingerprint {
    size_t d = 0;
    EtaCounts eta;
    std::vector<double> cycles;  // sorted, on a 1e-9 grid
};

inline constexpr double kCycleGrid = 1e-9;

inline Fingerprint fingerprint(const CHMatrix &h, double tol = kDefaultTolerance) {
    const size_t d = h.dim();
    Fingerprint fp;
    fp.d = d;
    fp.eta = eta_counts(dephase(h), tol);
    fp.cycles.reserve(d * (d - 1) / 2 * d * (d - 1) / 2);
    for (size_t i = 0; i < d; ++i) {
        for (size_t k = i + 1; k < d; ++k) {
            for (size_t j = 0; j < d; ++j) {
                for (size_t l = j + 1; l < d; ++l) {
                    Phase c = h(i, j) * h(k, l) * h(i, l).conj() * h(k, j).conj();
                    double a = c.angle();
                    if (c.is_exact()) {
                        int64_t folded = std::min(c.num(), c.den() - c.num());
                        a = kTwoPi * static_cast<double>(folded) / static_cast<double>(c.den());
                    } else if (a > std::numbers::pi) {
                        a = kTwoPi - a;
                    }
                    fp.cycles.push_back(std::round(a / kCycleGrid) * kCycleGrid);
                }
            }
        }
    }
    std::sort(fp.cycles.begin(), fp.cycles.end());
    return fp;
}

/// Fingerprints agree: same d and eta, cycle angles equal within `tol`.
inline bool same_fingerprint(const Fingerprint &a, const Fingerprint &b, double tol = kDefaultTolerance) {
    if (a.d != b.d || !(a.eta == b.eta) || a.cycles.size() != b.cycles.size()) return false;
    const double slack = std::max(tol, 2 * kCycleGrid);
    for (size_t k = 0; k < a.cycles.size(); ++k)
        if (std::abs(a.cycles[k] - b.cycles[k]) > slack) return false;
    return true;
}

enum class Verdict { Inequivalent, Inconclusive };

inline const char *verdict_name(Verdict v) { return v == Verdict::Inequivalent ? "inequivalent" : "inconclusive"; }

struct Distinction {
    Verdict verdict = Verdict::Inconclusive;
    std::string reason;
};

/// Certifies inequivalence when an invariant differs; never asserts
/// equivalence.
inline Distinction distinguish(const CHMatrix &a, const CHMatrix &b, double tol = kDefaultTolerance) {
    if (a.dim() != b.dim()) throw std::invalid_argument("distinguish: dimension mismatch");
    Fingerprint fa = fingerprint(a, tol), fb = fingerprint(b, tol);
    if (!(fa.eta == fb.eta)) return {Verdict::Inequivalent, "eta counts differ"};
    if (!same_fingerprint(fa, fb, tol)) return {Verdict::Inequivalent, "cycle multisets differ"};
    return {Verdict::Inconclusive, "all invariants agree"};
}

}  // namespace chm
