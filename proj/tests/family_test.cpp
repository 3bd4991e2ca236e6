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

#include "chm/family.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "chm/catalog.hpp"
#include "chm/scenarios.hpp"
#include "gtest/gtest.h"
#include "literal_patterns.hpp"

using chm::AffineFamily;
using chm::Axis;
using chm::CHMatrix;
using chm::Phase;
namespace sc = chm::scenarios;

namespace {

AffineFamily empty_family(const CHMatrix &h) { return AffineFamily{h, {}}; }

bool random_samples_are_hadamard(const AffineFamily &f, int samples, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, chm::kTwoPi);
    for (int s = 0; s < samples; ++s) {
        std::vector<double> xi(f.size());
        for (auto &x : xi) x = angle(rng);
        if (!chm::is_hadamard(chm::sample(f, std::span<const double>(xi)), 1e-9)) return false;
    }
    return true;
}

}  // namespace

TEST(RationalRank, Basics) {
    EXPECT_EQ(chm::rational_rank({}), 0u);
    EXPECT_EQ(chm::rational_rank({{1, 2, 3}, {2, 4, 6}}), 1u);
    EXPECT_EQ(chm::rational_rank({{1, 2}, {3, 4}}), 2u);
    EXPECT_EQ(chm::rational_rank({{0, 0}, {0, 0}}), 0u);
    EXPECT_EQ(chm::rational_rank({{2, 0, 0}, {0, 3, 0}, {5, 7, 0}, {1, 1, 1}}), 3u);
}

TEST(InjectPair, F4SingleParameter) {
    AffineFamily f = chm::inject_pair(empty_family(chm::fourier(4)), Axis::Columns, 1, 3, "x");
    ASSERT_EQ(f.size(), 1u);
    const auto &p = f.params[0];
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) EXPECT_EQ(p(i, j), (i % 2 == 1 && j % 2 == 1) ? 1 : 0);
    EXPECT_EQ(f, chm_test::literal_family(chm::fourier(4), chm_test::kF4));
}

TEST(InjectPair, F6TwoParameters) {
    AffineFamily f = chm::build_family(chm::fourier(6), {}, {{1, 4}, {2, 5}});
    EXPECT_EQ(f, chm_test::literal_family(chm::fourier(6), chm_test::kF6));
    EXPECT_EQ(chm::param_rank(f), 2u);
    EXPECT_TRUE(chm::verify_exact(f));
}

TEST(InjectPair, DependentFourierPair) {
    AffineFamily f = chm::inject_pair(empty_family(chm::fourier(4)), Axis::Columns, 1, 3, "a");
    AffineFamily g = chm::inject_pair(f, Axis::Columns, 0, 2, "b");
    EXPECT_EQ(g.size(), 2u);
    EXPECT_EQ(chm::param_rank(g), 1u);
    EXPECT_TRUE(chm::verify_exact(g));

    for (size_t d = 4; d <= 16; d += 2) {
        AffineFamily even = chm::fourier_family_even(d);
        size_t before = chm::param_rank(even);
        AffineFamily more = chm::inject_pair(even, Axis::Columns, 0, d / 2, "extra");
        EXPECT_EQ(chm::param_rank(more), before) << d;
    }
}

TEST(InjectPair, Errors) {
    AffineFamily f5 = empty_family(chm::fourier(5));
    try {
        chm::inject_pair(f5, Axis::Columns, 0, 1, "a");
        FAIL() << "expected InjectionError";
    } catch (const chm::InjectionError &e) {
        EXPECT_NE(std::string(e.what()).find("not ER"), std::string::npos);
        EXPECT_EQ(e.entry(), 1u);
    }
    AffineFamily f4 = chm::inject_pair(empty_family(chm::fourier(4)), Axis::Columns, 1, 3, "a");
    EXPECT_THROW(chm::inject_pair(f4, Axis::Columns, 0, 2, "a"), std::invalid_argument);
    EXPECT_THROW(chm::inject_pair(f4, Axis::Columns, 2, 2, "z"), std::invalid_argument);

    // Column pair (0, 1) of the F4 family: base products are not +-1.
    EXPECT_THROW(chm::inject_pair(f4, Axis::Columns, 0, 1, "z"), chm::InjectionError);
}

TEST(InjectPair, FamilyContextBlocksMismatchedCoefficients) {
    // In H8 every column pair is ER in the base, but a row parameter makes
    // coefficients differ between columns 0 and 1.
    AffineFamily rows = sc::h8_row_family();
    EXPECT_TRUE(chm::er_sign_vector(rows.base, Axis::Columns, 0, 1).has_value());
    try {
        chm::inject_pair(rows, Axis::Columns, 0, 1, "z");
        FAIL() << "expected InjectionError";
    } catch (const chm::InjectionError &e) {
        EXPECT_NE(std::string(e.what()).find("not ER"), std::string::npos);
    }
}

TEST(BuildFamily, ReportsFailingPair) {
    try {
        chm::build_family(chm::fourier(6), {{1, 4}}, {{0, 1}});
        FAIL() << "expected InjectionError";
    } catch (const chm::InjectionError &e) {
        EXPECT_NE(std::string(e.what()).find("columns (0,1)"), std::string::npos);
    }
}

TEST(ParamRank, FourierEven) {
    EXPECT_EQ(chm::param_rank(empty_family(chm::fourier(4))), 0u);
    for (size_t d = 2; d <= 16; d += 2) {
        AffineFamily f = chm::fourier_family_even(d);
        EXPECT_EQ(f.size(), d / 2 - 1);
        EXPECT_EQ(chm::param_rank(f), d / 2 - 1) << d;
        EXPECT_TRUE(chm::verify_exact(f)) << d;
        EXPECT_TRUE(chm::verify_exact(chm::transpose(f))) << d;
        if (d >= 4) {
            EXPECT_TRUE(chm_test::same_span(f, chm::build_family(chm::fourier(d), {}, sc::half_shift_pairs(d))));
        }
    }
    EXPECT_EQ(chm::fourier_family_even(6), chm_test::literal_family(chm::fourier(6), chm_test::kF6));
    EXPECT_THROW(chm::fourier_family_even(7), std::invalid_argument);
}

TEST(ParamRank, FourierDoublyEven) {
    const std::pair<size_t, size_t> expected[] = {{8, 5}, {12, 9}, {16, 13}};
    for (auto [d, rank] : expected) {
        AffineFamily f = chm::fourier_family_doubly_even(d);
        EXPECT_EQ(f.size(), d - 2);
        EXPECT_EQ(chm::param_rank(f), rank) << d;
        EXPECT_TRUE(chm::verify_exact(f)) << d;
        AffineFamily built = sc::fourier_rows_and_columns(d);
        EXPECT_EQ(built.size(), d - 2);
        EXPECT_EQ(chm::param_rank(built), rank) << d;
        EXPECT_TRUE(chm_test::same_span(f, built)) << d;
    }
    EXPECT_THROW(chm::fourier_family_doubly_even(4), std::invalid_argument);
    EXPECT_THROW(chm::fourier_family_doubly_even(10), std::invalid_argument);
}

TEST(ParamRank, FourierDoublyEvenMatchesPrintedPatterns) {
    AffineFamily f8 = chm_test::literal_family(chm::fourier(8), chm_test::kF8);
    AffineFamily f12 = chm_test::literal_family(chm::fourier(12), chm_test::kF12);
    AffineFamily f16 = chm_test::literal_family(chm::fourier(16), chm_test::kF16);
    EXPECT_EQ(chm::param_rank(f8), 5u);
    EXPECT_EQ(chm::param_rank(f12), 9u);
    EXPECT_EQ(chm::param_rank(f16), 13u);
    EXPECT_TRUE(chm::verify_exact(f8));
    EXPECT_TRUE(chm::verify_exact(f12));
    EXPECT_TRUE(chm::verify_exact(f16));
    EXPECT_TRUE(chm_test::same_span(f8, chm::fourier_family_doubly_even(8)));
    EXPECT_TRUE(chm_test::same_span(f12, chm::fourier_family_doubly_even(12)));
    EXPECT_TRUE(chm_test::same_span(f16, chm::fourier_family_doubly_even(16)));
}

TEST(ParamRank, F16PairOnTheHalfShiftIsDependent) {
    // Adding the (8, 16) column pair (1-based) does not raise the rank.
    AffineFamily f = sc::fourier_rows_and_columns(16);
    AffineFamily g = chm::inject_pair(f, Axis::Columns, 7, 15, "extra");
    EXPECT_EQ(chm::param_rank(g), 13u);
}

TEST(VerifyExact, DetectsBrokenPattern) {
    AffineFamily f = empty_family(chm::fourier(4));
    chm::ParamPattern p("bad", 4);
    p(1, 1) = 1;
    f.params.push_back(p);
    EXPECT_FALSE(chm::verify_exact(f));
    EXPECT_TRUE(chm::verify_exact(empty_family(chm::fourier(4))));
}

TEST(VerifyExact, WholeColumnPatternIsGauge) {
    // A parameter on every entry of one column is a column phase, which
    // keeps all columns orthogonal.
    AffineFamily f = empty_family(chm::fourier(4));
    chm::ParamPattern p("col", 4);
    for (size_t i = 0; i < 4; ++i) p(i, 1) = 1;
    f.params.push_back(p);
    EXPECT_TRUE(chm::verify_exact(f));
    EXPECT_EQ(chm::param_rank(f), 0u);
}

TEST(VerifyExact, FloatBaseUsesTolerance) {
    AffineFamily f = chm::fourier_family_even(6);
    const double xi[] = {0.3, 1.1};
    AffineFamily g{chm::sample(f, std::span<const double>(xi)), f.params};
    EXPECT_FALSE(g.base.is_exact());
    EXPECT_TRUE(chm::verify_exact(g));
}

TEST(Sample, ZeroIsBaseBitExact) {
    AffineFamily f = sc::h12_family();
    std::vector<double> zeros(f.size(), 0.0);
    EXPECT_EQ(chm::sample(f, std::span<const double>(zeros)), f.base);
    std::vector<Phase> ones(f.size(), Phase::one());
    EXPECT_EQ(chm::sample(f, std::span<const Phase>(ones)), f.base);
    std::vector<double> wrong(f.size() + 1, 0.0);
    EXPECT_THROW(chm::sample(f, std::span<const double>(wrong)), std::invalid_argument);
}

TEST(Sample, F4AtPi) {
    AffineFamily f = chm::fourier_family_even(4);
    const double xi[] = {std::numbers::pi};
    CHMatrix m = chm::sample(f, std::span<const double>(xi));
    CHMatrix f4 = chm::fourier(4);
    for (size_t i = 0; i < 4; ++i) {
        for (size_t j = 0; j < 4; ++j) {
            double expect = f4(i, j).angle() + ((i % 2 && j % 2) ? std::numbers::pi : 0.0);
            EXPECT_LE(chm::angle_distance(m(i, j).angle(), expect), 1e-12);
        }
    }
    EXPECT_TRUE(chm::is_hadamard(m));

    const Phase half = Phase::exact(1, 2);
    CHMatrix exact = chm::sample(f, std::span<const Phase>(&half, 1));
    EXPECT_TRUE(exact.is_exact());
    EXPECT_TRUE(chm::approx_equal(exact, m));
}

TEST(Sample, RandomFloatSamplesStayHadamard) {
    EXPECT_TRUE(random_samples_are_hadamard(chm::fourier_family_even(10), 50, 1));
    EXPECT_TRUE(random_samples_are_hadamard(chm::fourier_family_doubly_even(12), 50, 2));
    EXPECT_TRUE(random_samples_are_hadamard(sc::h12_family(), 50, 3));
    EXPECT_TRUE(random_samples_are_hadamard(sc::h10w_row_family(), 50, 4));
}

TEST(Sample, ZeroPiSamplesOfRealFamiliesAreReal) {
    for (const AffineFamily &f : {sc::h8_row_family(), sc::h12_family()}) {
        std::mt19937_64 rng(9);
        for (int t = 0; t < 30; ++t) {
            std::vector<Phase> xi(f.size());
            for (auto &x : xi) x = Phase::sign(rng() % 2 ? 1 : -1);
            CHMatrix m = chm::sample(f, std::span<const Phase>(xi));
            EXPECT_TRUE(chm::is_hadamard(m));
            for (const auto &e : m.entries()) EXPECT_TRUE(e == Phase::one() || e == Phase::exact(1, 2));
        }
    }
}

TEST(Transpose, SwapsRowAndColumnFamilies) {
    AffineFamily f = chm::fourier_family_even(8);
    AffineFamily t = chm::transpose(f);
    EXPECT_EQ(t.base, chm::fourier(8));  // symmetric base
    EXPECT_EQ(t.params[0](1, 3), f.params[0](3, 1));
    EXPECT_EQ(chm::transpose(t), f);
}

TEST(H8, RowFamilyAndColumnChoices) {
    AffineFamily rows = sc::h8_row_family();
    // Four aligned row pairs: one parameter is absorbed by dephasing.
    EXPECT_EQ(rows.size(), 4u);
    EXPECT_EQ(chm::param_rank(rows), 3u);
    EXPECT_TRUE(chm_test::same_span(rows, chm_test::literal_family(rows.base, chm_test::kH8Rows)));

    EXPECT_EQ(chm::count_matchings(rows.base, Axis::Rows), 105u);

    std::vector<chm::IndexPairs> found;
    uint64_t n = chm::enumerate_matchings(rows, Axis::Columns, [&](const chm::Matching &m) {
        found.push_back(sc::normalized(m));
        return true;
    });
    EXPECT_EQ(n, 9u);
    auto expected = sc::h8_column_choices();
    std::sort(found.begin(), found.end());
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(found, expected);

    for (const auto &cols : sc::h8_column_choices()) {
        AffineFamily f = chm::build_family(rows.base, sc::h8_row_pairs(), cols);
        EXPECT_EQ(chm::param_rank(f), 5u);
        EXPECT_TRUE(chm::verify_exact(f));
    }
    AffineFamily a = chm::build_family(rows.base, sc::h8_row_pairs(), sc::h8_column_choices()[0]);
    EXPECT_TRUE(chm_test::same_span(a, chm_test::literal_family(rows.base, chm_test::kH8A)));
}

TEST(H12, EightParameters) {
    AffineFamily f = sc::h12_family();
    EXPECT_EQ(f.size(), 8u);
    EXPECT_EQ(chm::param_rank(f), 8u);
    EXPECT_TRUE(chm::verify_exact(f));
    AffineFamily printed = chm_test::literal_family(f.base, chm_test::kH12);
    EXPECT_TRUE(chm::verify_exact(printed));
    EXPECT_TRUE(chm_test::same_span(f, printed));
}

TEST(H12, CombinedChoiceCount) {
    // Every row matching of H12 allows a maximum column matching; the total
    // equals the number of perfect row matchings, 11!! = 10395.
    auto c = chm::count_combined_choices(chm::catalog_get("H12"));
    EXPECT_EQ(c.row_matchings, 10395u);
    EXPECT_EQ(c.combined, 10395u);
    auto h8 = chm::count_combined_choices(chm::catalog_get("H8"));
    EXPECT_EQ(h8.row_matchings, 105u);
    EXPECT_EQ(h8.combined, 161u);
}

TEST(H10w, RowFamilyBlocksColumns) {
    AffineFamily f = sc::h10w_row_family();
    EXPECT_EQ(chm::param_rank(f), 5u);
    EXPECT_TRUE(chm::verify_exact(f));
    EXPECT_TRUE(chm_test::same_span(f, chm_test::literal_family(f.base, chm_test::kH10w)));
    EXPECT_EQ(chm::count_matchings(f.base, Axis::Columns), 1u);
    EXPECT_EQ(chm::count_matchings(f, Axis::Columns), 0u);
    EXPECT_EQ(chm::valid_pair_graph(f, Axis::Columns).edge_count(), 0u);
    EXPECT_THROW(chm::inject_pair(f, Axis::Columns, 0, 5, "z"), chm::InjectionError);
}

TEST(D12, ScriptedConstruction) {
    auto c = sc::d12_construction();
    EXPECT_TRUE(c.base.is_exact());
    EXPECT_TRUE(chm::is_hadamard(c.base));
    EXPECT_TRUE(c.sampled.is_exact());
    EXPECT_TRUE(chm::is_hadamard(c.sampled));
    EXPECT_TRUE(c.matches);
}
