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

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace chm {

/// Largest common denominator for which exact cyclotomic arithmetic is used.
inline constexpr int64_t kMaxExactDenominator = 360;

namespace detail {

inline int mobius(int64_t n) {
    int result = 1;
    for (int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

// p <- p * (x^k - 1)
inline void mul_xk_minus_one(std::vector<int64_t> &p, int64_t k) {
    std::vector<int64_t> out(p.size() + k, 0);
    for (size_t i = 0; i < p.size(); ++i) {
        out[i + k] += p[i];
        out[i] -= p[i];
    }
    p = std::move(out);
}

// p <- p / (x^k - 1), division assumed exact.
inline void div_xk_minus_one(std::vector<int64_t> &p, int64_t k) {
    size_t deg_q = p.size() - 1 - k;
    std::vector<int64_t> q(deg_q + 1, 0);
    for (size_t i = 0; i <= deg_q; ++i) {
        q[i] = (i >= static_cast<size_t>(k) ? q[i - k] : 0) - p[i];
    }
    p = std::move(q);
}

}  // namespace detail

/// Coefficients (lowest degree first) of the n-th cyclotomic polynomial,
/// via the Moebius product over divisors.
inline std::vector<int64_t> cyclotomic_polynomial(int64_t n) {
    if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
    std::vector<int64_t> p{1};
    std::vector<int64_t> denominators;
    for (int64_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        int mu = detail::mobius(n / d);
        if (mu == 1) detail::mul_xk_minus_one(p, d);
        if (mu == -1) denominators.push_back(d);
    }
    for (int64_t d : denominators) detail::div_xk_minus_one(p, d);
    return p;
}

/// Decides exactly whether sum_k counts[k] * zeta_L^k == 0, where
/// zeta_L = e^{2 pi i / L} and L = counts.size(). The sum vanishes iff the
/// polynomial sum_k counts[k] x^k is divisible by the L-th cyclotomic
/// polynomial.
inline bool root_of_unity_sum_is_zero(std::vector<int64_t> counts) {
    int64_t L = static_cast<int64_t>(counts.size());
    if (L == 0) return true;
    std::vector<int64_t> phi = cyclotomic_polynomial(L);
    size_t deg = phi.size() - 1;
    for (size_t top = counts.size(); top-- > deg;) {
        int64_t c = counts[top];
        if (c == 0) continue;
        for (size_t i = 0; i <= deg; ++i) {
            counts[top - deg + i] -= c * phi[i];
        }
    }
    for (size_t i = 0; i < deg && i < counts.size(); ++i) {
        if (counts[i] != 0) return false;
    }
    return true;
}

}  // namespace chm
