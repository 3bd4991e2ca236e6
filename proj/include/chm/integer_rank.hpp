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
#include <numeric>
#include <stdexcept>
#include <vector>

namespace chm {

/// Rank over the rationals of an integer matrix given as rows.
///
/// Fraction-free elimination; after every row update the row is divided by
/// the gcd of its entries, which keeps magnitudes small for the coefficient
/// patterns this library deals with. Overflow is detected and reported.
inline size_t rational_rank(std::vector<std::vector<int64_t>> rows) {
    if (rows.empty()) return 0;
    const size_t ncols = rows.front().size();
    size_t rank = 0;
    auto normalize = [](std::vector<int64_t> &row) {
        int64_t g = 0;
        for (int64_t x : row) g = std::gcd(g, x);
        if (g > 1)
            for (int64_t &x : row) x /= g;
    };
    for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const std::vector<int64_t> &p = rows[rank];
        for (size_t r = rank + 1; r < rows.size(); ++r) {
            int64_t f = rows[r][col];
            if (f == 0) continue;
            int64_t pv = p[col];
            for (size_t c = col; c < ncols; ++c) {
                int64_t x = 0, y = 0, z = 0;
                if (__builtin_mul_overflow(rows[r][c], pv, &x) || __builtin_mul_overflow(p[c], f, &y) ||
                    __builtin_sub_overflow(x, y, &z)) {
                    throw std::overflow_error("rational_rank: coefficient overflow");
                }
                rows[r][c] = z;
            }
            normalize(rows[r]);
        }
        ++rank;
    }
    return rank;
}

}  // namespace chm
