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

#include <random>

#include "chm/catalog.hpp"
#include "chm/matrix.hpp"
#include "gtest/gtest.h"

using chm::CHMatrix;
using chm::Phase;

namespace {

CHMatrix from_signs(size_t d, const std::vector<int> &s) {
    std::vector<Phase> e;
    for (int x : s) e.push_back(Phase::sign(x));
    return CHMatrix(d, e);
}

}  // namespace

TEST(Fourier, SmallCases) {
    EXPECT_EQ(chm::fourier(1), CHMatrix(1));
    EXPECT_EQ(chm::fourier(2), from_signs(2, {1, 1, 1, -1}));
    CHMatrix f4 = chm::fourier(4);
    const Phase i = Phase::exact(1, 4), m = Phase::exact(1, 2), mi = Phase::exact(3, 4), o = Phase::one();
    std::vector<Phase> expected = {o, o, o, o, o, i, m, mi, o, m, o, m, o, mi, m, i};
    EXPECT_EQ(f4, CHMatrix(4, expected));
    EXPECT_THROW(chm::fourier(0), std::invalid_argument);
}

TEST(Fourier, HadamardUpTo32) {
    for (size_t d = 1; d <= 32; ++d) EXPECT_TRUE(chm::is_hadamard(chm::fourier(d), 1e-12)) << d;
}

TEST(IsHadamard, DetectsBrokenEntry) {
    CHMatrix f = chm::fourier(4);
    f(1, 1) = Phase::one();
    EXPECT_FALSE(chm::is_hadamard(f));
    // Columns 0 and 1 have inner product 1 + 1 - 1 - i - ... != 0 directly.
    auto c = f.to_complex();
    std::complex<double> ip = 0;
    for (size_t k = 0; k < 4; ++k) ip += std::conj(c[k * 4]) * c[k * 4 + 1];
    EXPECT_GT(std::abs(ip), 0.5);
}

TEST(IsHadamard, FloatPathAgreesWithExact) {
    CHMatrix f = chm::fourier(6);
    CHMatrix g(6);
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j) g(i, j) = Phase::radians(f(i, j).angle());
    EXPECT_FALSE(g.is_exact());
    EXPECT_TRUE(chm::is_hadamard(g));
    g(2, 3) = Phase::radians(g(2, 3).angle() + 1e-3);
    EXPECT_FALSE(chm::is_hadamard(g));
}

TEST(Catalog, EveryEntryIsExactHadamard) {
    for (const auto &name : chm::catalog_names()) {
        auto e = chm::catalog_entry(name);
        EXPECT_TRUE(e.matrix.is_exact()) << name;
        EXPECT_TRUE(e.matrix.common_denominator().has_value()) << name;
        EXPECT_TRUE(chm::is_hadamard(e.matrix, 1e-12)) << name;
        EXPECT_FALSE(e.notes.empty());
    }
    EXPECT_EQ(chm::catalog_get("F6"), chm::fourier(6));
    EXPECT_THROW(chm::catalog_get("H9"), chm::NotFound);
    EXPECT_THROW(chm::catalog_get("F0"), chm::NotFound);
    EXPECT_THROW(chm::catalog_get("Fx"), chm::NotFound);
}

TEST(Catalog, H10wUsesCubeRoots) {
    CHMatrix h = chm::catalog_get("H10w");
    EXPECT_EQ(h(1, 3), Phase::exact(1, 3));
    EXPECT_EQ(h(1, 4), Phase::exact(2, 3));
    EXPECT_EQ(h(5, 6), Phase::exact(5, 6));  // -w
    EXPECT_EQ(h(5, 7), Phase::exact(1, 6));  // -w^2
}

TEST(Dephase, IdempotentAndGaugeRemoving) {
    CHMatrix h8 = chm::catalog_get("H8");
    EXPECT_EQ(chm::dephase(h8), h8);

    CHMatrix f3 = chm::fourier(3);
    CHMatrix g = f3;
    for (size_t j = 0; j < 3; ++j) g(0, j) = g(0, j) * Phase::exact(1, 4);
    EXPECT_EQ(chm::dephase(g), f3);

    std::mt19937_64 rng(7);
    for (const auto &name : chm::catalog_names()) {
        CHMatrix h = chm::catalog_get(name);
        CHMatrix moved = chm::random_move(h.dim(), rng).apply(h);
        CHMatrix once = chm::dephase(moved);
        EXPECT_EQ(chm::dephase(once), once);
        EXPECT_TRUE(chm::is_hadamard(once));
        for (size_t k = 0; k < h.dim(); ++k) {
            EXPECT_EQ(once(0, k), Phase::one());
            EXPECT_EQ(once(k, 0), Phase::one());
        }
    }
}

TEST(Kron, F2xF2IsHadamard) {
    CHMatrix k = chm::kron(chm::fourier(2), chm::fourier(2));
    EXPECT_EQ(k.dim(), 4u);
    EXPECT_TRUE(chm::is_hadamard(k));
    EXPECT_FALSE(k == chm::fourier(4));
}

TEST(Permute, ConventionAndValidation) {
    CHMatrix f = chm::fourier(3);
    CHMatrix p = chm::permute(f, {1, 2, 0}, {0, 1, 2});
    for (size_t j = 0; j < 3; ++j) EXPECT_EQ(p(1, j), f(0, j));
    EXPECT_THROW(chm::permute(f, {0, 0, 1}, {0, 1, 2}), std::invalid_argument);
    EXPECT_THROW(chm::permute(f, {0, 1}, {0, 1, 2}), std::invalid_argument);
}

TEST(Transpose, Involution) {
    CHMatrix h = chm::catalog_get("H10w");
    EXPECT_EQ(h.transpose().transpose(), h);
    EXPECT_EQ(h.transpose()(2, 5), h(5, 2));
}
