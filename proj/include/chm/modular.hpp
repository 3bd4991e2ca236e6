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

namespace chm::modular {

using u64 = uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 pow_mod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    for (; e; e >>= 1) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
    }
    return r;
}

/// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s && composite; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) composite = false;
        }
        if (composite) return false;
    }
    return true;
}

inline std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Montgomery arithmetic modulo an odd p < 2^62, R = 2^64.
class Montgomery {
   public:
    explicit Montgomery(u64 p) : p_(p) {
        if (p % 2 == 0 || p >= (u64{1} << 62)) throw std::invalid_argument("Montgomery: need odd p < 2^62");
        u64 inv = p;  // Newton iteration for p^{-1} mod 2^64
        for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
        neg_inv_ = ~inv + 1;
        r2_ = static_cast<u64>((static_cast<u128>(1) << 64) % p);
        r2_ = mul_mod(r2_, r2_, p);
    }

    u64 modulus() const { return p_; }

    u64 reduce(u128 t) const {
        u64 m = static_cast<u64>(t) * neg_inv_;
        u64 r = static_cast<u64>((t + static_cast<u128>(m) * p_) >> 64);
        return r >= p_ ? r - p_ : r;
    }
    u64 to(u64 x) const { return reduce(static_cast<u128>(x % p_) * r2_); }
    u64 from(u64 x) const { return reduce(x); }
    u64 mul(u64 a, u64 b) const { return reduce(static_cast<u128>(a) * b); }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
    u64 pow(u64 a, u64 e) const {
        u64 r = to(1);
        for (; e; e >>= 1) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p_ - 2); }

   private:
    u64 p_;
    u64 neg_inv_;
    u64 r2_;
};

/// Primes p = 1 (mod n) below 2^62, in decreasing order, starting below
/// `below`.
inline u64 next_prime_one_mod(u64 n, u64 below) {
    u64 k = (below - 2) / n;
    for (; k > 0; --k) {
        u64 p = k * n + 1;
        if (is_prime(p)) return p;
    }
    throw std::runtime_error("next_prime_one_mod: exhausted");
}

/// A primitive n-th root of unity modulo a prime p = 1 (mod n).
inline u64 primitive_root_of_unity(u64 n, u64 p) {
    auto factors = prime_factors(n);
    for (u64 a = 2; a < p; ++a) {
        u64 g = pow_mod(a, (p - 1) / n, p);
        bool primitive = true;
        for (u64 q : factors) {
            if (pow_mod(g, n / q, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
    throw std::runtime_error("primitive_root_of_unity: none found");
}

/// Rank of a dense matrix (entries already reduced, Montgomery form) over
/// GF(p). The matrix is consumed.
inline size_t rank_mod(std::vector<u64> &a, size_t rows, size_t cols, const Montgomery &mg) {
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t piv = rank;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (size_t k = c; k < cols; ++k) std::swap(a[piv * cols + k], a[rank * cols + k]);
        u64 *prow = &a[rank * cols];
        u64 inv = mg.inv(prow[c]);
        for (size_t k = c; k < cols; ++k) prow[k] = mg.mul(prow[k], inv);
        for (size_t r = rank + 1; r < rows; ++r) {
            u64 *row = &a[r * cols];
            u64 f = row[c];
            if (f == 0) continue;
            for (size_t k = c; k < cols; ++k) {
                if (prow[k]) row[k] = mg.sub(row[k], mg.mul(f, prow[k]));
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace chm::modular
