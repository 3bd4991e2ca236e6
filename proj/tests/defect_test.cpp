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

#include "chm/defect.hpp"

#include <numeric>

#include "chm/catalog.hpp"
#include "chm/family.hpp"
#include "chm/scenarios.hpp"
#include "gtest/gtest.h"

using chm::DefectMethod;

namespace {

// Known closed form for Fourier matrices: sum_k gcd(k, N) - (2N - 1).
size_t fourier_defect_oracle(size_t n) {
    size_t s = 0;
    for (size_t k = 0; k < n; ++k) s += std::gcd(k, n);
    return s - (2 * n - 1);
}

}  // namespace

TEST(Modular, PrimalityAndRoots) {
    using namespace chm::modular;
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(1000000007));
    EXPECT_FALSE(is_prime(561));
    EXPECT_FALSE(is_prime(3215031751ULL));
    EXPECT_TRUE(is_prime(4611686018427387847ULL));
    uint64_t p = next_prime_one_mod(12, uint64_t{1} << 62);
    EXPECT_EQ(p % 12, 1u);
    uint64_t g = primitive_root_of_unity(12, p);
    EXPECT_EQ(pow_mod(g, 12, p), 1u);
    EXPECT_NE(pow_mod(g, 6, p), 1u);
    EXPECT_NE(pow_mod(g, 4, p), 1u);
    Montgomery mg(p);
    EXPECT_EQ(mg.from(mg.mul(mg.to(123456789), mg.to(987654321))), mul_mod(123456789, 987654321, p));
    EXPECT_EQ(mg.from(mg.mul(mg.inv(mg.to(77)), mg.to(77))), 1u);
}

TEST(Defect, PaperValues) {
    EXPECT_EQ(chm::defect(chm::fourier(4)).defect, 1u);
    EXPECT_EQ(chm::defect(chm::fourier(5)).defect, 0u);
    EXPECT_EQ(chm::defect(chm::kron(chm::fourier(2), chm::fourier(2))).defect, 3u);
}

TEST(Defect, FourierPrimesAreZero) {
    for (size_t p : {2, 3, 5, 7, 11, 13}) {
        EXPECT_EQ(chm::defect(chm::fourier(p), DefectMethod::ExactRational).defect, 0u) << p;
        EXPECT_EQ(chm::defect(chm::fourier(p), DefectMethod::FloatSVD).defect, 0u) << p;
    }
}

TEST(Defect, FourierClosedForm) {
    for (size_t n = 1; n <= 16; ++n) {
        auto r = chm::defect(chm::fourier(n));
        EXPECT_EQ(r.method, DefectMethod::ExactRational);
        EXPECT_EQ(r.defect, fourier_defect_oracle(n)) << n;
        EXPECT_EQ(r.system_cols, (n - 1) * (n - 1));
        EXPECT_EQ(r.system_rows, n * (n - 1));
        EXPECT_EQ(r.rank + r.defect, r.system_cols);
    }
}

TEST(Defect, F6ExactAndFloatAgree) {
    auto e = chm::defect(chm::fourier(6), DefectMethod::ExactRational);
    auto f = chm::defect(chm::fourier(6), DefectMethod::FloatSVD);
    EXPECT_EQ(e.defect, 4u);
    EXPECT_EQ(f.defect, 4u);
    EXPECT_EQ(f.method, DefectMethod::FloatSVD);
}

TEST(Defect, CatalogExactAndFloatAgree) {
    for (const auto &name : chm::catalog_names()) {
        auto m = chm::catalog_get(name);
        auto e = chm::defect(m, DefectMethod::ExactRational);
        auto f = chm::defect(m, DefectMethod::FloatSVD);
        EXPECT_EQ(e.defect, f.defect) << name;
        EXPECT_TRUE(e.upper_bound_only);
    }
}

TEST(Defect, BoundsFamilyRank) {
    namespace sc = chm::scenarios;
    std::vector<chm::AffineFamily> families = {sc::h8_row_family(), sc::h12_family(), sc::h10w_row_family()};
    for (const auto &cols : sc::h8_column_choices())
        families.push_back(chm::build_family(chm::catalog_get("H8"), sc::h8_row_pairs(), cols));
    for (size_t d = 2; d <= 16; d += 2) families.push_back(chm::fourier_family_even(d));
    for (size_t d = 8; d <= 16; d += 4) families.push_back(chm::fourier_family_doubly_even(d));
    for (const auto &f : families) EXPECT_GE(chm::defect(f.base).defect, chm::param_rank(f));
}

TEST(Defect, FloatInputUsesSvd) {
    chm::CHMatrix f = chm::fourier(6);
    chm::CHMatrix g(6);
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j) g(i, j) = chm::Phase::radians(f(i, j).angle());
    auto r = chm::defect(g);
    EXPECT_EQ(r.method, DefectMethod::FloatSVD);
    EXPECT_EQ(r.defect, 4u);
    EXPECT_THROW(chm::defect(g, DefectMethod::ExactRational), std::invalid_argument);
}

TEST(Defect, RejectsNonHadamard) {
    chm::CHMatrix f = chm::fourier(4);
    f(1, 1) = chm::Phase::one();
    EXPECT_THROW(chm::defect(f), std::invalid_argument);
}

TEST(Defect, MethodNames) {
    EXPECT_EQ(chm::parse_defect_method("exact"), DefectMethod::ExactRational);
    EXPECT_EQ(std::string(chm::defect_method_name(DefectMethod::FloatSVD)), "float");
    EXPECT_THROW(chm::parse_defect_method("fast"), std::invalid_argument);
}
