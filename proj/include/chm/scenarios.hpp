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
#include <string>
#include <vector>

#include "chm/catalog.hpp"
#include "chm/family.hpp"

namespace chm::scenarios {

/// Normalizes a pair list: each pair as (min, max), pairs sorted.
inline IndexPairs normalized(IndexPairs pairs) {
    for (auto &[a, b] : pairs)
        if (a > b) std::swap(a, b);
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

/// Converts 1-based labels to 0-based indices.
inline IndexPairs from_one_based(const IndexPairs &pairs) {
    IndexPairs out;
    for (auto [a, b] : pairs) {
        if (a == 0 || b == 0) throw std::invalid_argument("1-based index must be positive");
        out.emplace_back(a - 1, b - 1);
    }
    return out;
}

/// The aligned Fourier pairs (k, k + d/2) for k = 1..d/2-1. Pair k = 0 is
/// left out; its parameter would be dependent after dephasing.
inline IndexPairs half_shift_pairs(size_t d) {
    IndexPairs out;
    for (size_t k = 1; k < d / 2; ++k) out.emplace_back(k, k + d / 2);
    return out;
}

/// Row-and-column Fourier family built by injection, rows first.
inline AffineFamily fourier_rows_and_columns(size_t d) {
    return build_family(fourier(d), half_shift_pairs(d), half_shift_pairs(d));
}

/// Row pairs {1,5; 2,8; 3,4; 6,7} (1-based) of the order-8 real matrix.
inline IndexPairs h8_row_pairs() { return from_one_based({{1, 5}, {2, 8}, {3, 4}, {6, 7}}); }

inline AffineFamily h8_row_family() { return build_family(catalog_get("H8"), h8_row_pairs(), {}); }

/// The nine column choices C_A..C_I that remain valid inside the H8 row
/// family, 0-based and normalized.
inline std::vector<IndexPairs> h8_column_choices() {
    const std::vector<IndexPairs> one_based = {
        {{1, 3}, {5, 7}, {2, 4}, {6, 8}}, {{1, 3}, {5, 7}, {2, 6}, {4, 8}}, {{1, 3}, {5, 7}, {2, 8}, {4, 6}},
        {{1, 5}, {3, 7}, {2, 4}, {6, 8}}, {{1, 5}, {3, 7}, {2, 6}, {4, 8}}, {{1, 5}, {3, 7}, {2, 8}, {4, 6}},
        {{1, 7}, {3, 5}, {2, 4}, {6, 8}}, {{1, 7}, {3, 5}, {2, 6}, {4, 8}}, {{1, 7}, {3, 5}, {2, 8}, {4, 6}},
    };
    std::vector<IndexPairs> out;
    for (const auto &c : one_based) out.push_back(normalized(from_one_based(c)));
    return out;
}

inline const char *h8_choice_label(size_t k) {
    static const char *labels[] = {"C_A", "C_B", "C_C", "C_D", "C_E", "C_F", "C_G", "C_H", "C_I"};
    return k < 9 ? labels[k] : "?";
}

/// Pairing of the order-12 real matrix giving eight parameters:
/// rows {1,5; 2,11; 3,7; 4,8; 6,12; 9,10} and columns {1,6; 2,3} (1-based).
inline IndexPairs h12_row_pairs() {
    return from_one_based({{1, 5}, {2, 11}, {3, 7}, {4, 8}, {6, 12}, {9, 10}});
}
inline IndexPairs h12_col_pairs() { return from_one_based({{1, 6}, {2, 3}}); }

inline AffineFamily h12_family() { return build_family(catalog_get("H12"), h12_row_pairs(), h12_col_pairs()); }

/// Row ER pairs of H10w: {1,10; 2,7; 3,8; 4,9; 5,6} (1-based).
inline IndexPairs h10w_row_pairs() { return from_one_based({{1, 10}, {2, 7}, {3, 8}, {4, 9}, {5, 6}}); }

inline AffineFamily h10w_row_family() { return build_family(catalog_get("H10w"), h10w_row_pairs(), {}); }

/// Scripted route from the order-12 real matrix to D12: multiply columns
/// 1..6 by i, inject the row pair (0, 11), take xi = -pi/2, dephase, and
/// reorder with the recorded permutations.
struct D12Construction {
    CHMatrix base;
    AffineFamily family;
    CHMatrix sampled;
    CHMatrix dephased;
    CHMatrix permuted;
    std::vector<size_t> row_perm;
    std::vector<size_t> col_perm;
    bool matches = false;
};

inline D12Construction d12_construction() {
    D12Construction out;
    out.base = catalog_get("H12");
    for (size_t i = 0; i < 12; ++i)
        for (size_t j = 1; j <= 6; ++j) out.base(i, j) = out.base(i, j) * Phase::exact(1, 4);
    out.family = inject_pair(AffineFamily{out.base, {}}, Axis::Rows, 0, 11, "xi");
    const Phase xi = Phase::exact(-1, 4);
    out.sampled = sample(out.family, std::span<const Phase>(&xi, 1));
    out.dephased = dephase(out.sampled);
    out.row_perm = {0, 1, 4, 10, 9, 7, 5, 6, 2, 3, 8, 11};
    out.col_perm = {0, 3, 2, 8, 9, 1, 11, 5, 6, 4, 7, 10};
    out.permuted = permute(out.dephased, out.row_perm, out.col_perm);
    out.matches = out.permuted == catalog_get("D12");
    return out;
}

}  // namespace chm::scenarios
