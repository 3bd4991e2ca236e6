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

#include "chm/io.hpp"

#include "chm/catalog.hpp"
#include "chm/scenarios.hpp"
#include "gtest/gtest.h"

using chm::ParseError;

namespace {

std::string location_of(const std::string &text, bool family) {
    try {
        if (family) {
            chm::parse_family(text);
        } else {
            chm::parse_matrix(text);
        }
    } catch (const ParseError &e) {
        return e.location();
    }
    return "<no error>";
}

}  // namespace

TEST(MatrixIO, RoundTripExactAndFloat) {
    for (const auto &name : chm::catalog_names()) {
        chm::CHMatrix h = chm::catalog_get(name);
        EXPECT_EQ(chm::parse_matrix(chm::matrix_to_json(h).dump()), h) << name;
    }
    chm::AffineFamily f = chm::fourier_family_even(6);
    const double xi[] = {0.123456789012345, 2.5};
    chm::CHMatrix g = chm::sample(f, std::span<const double>(xi));
    EXPECT_EQ(chm::parse_matrix(chm::matrix_to_json(g).dump()), g);
}

TEST(MatrixIO, WritesExactAsNumDen) {
    auto j = chm::matrix_to_json(chm::fourier(4));
    EXPECT_EQ(j["d"], 4);
    EXPECT_EQ(j["entries"][1][1]["num"], 1);
    EXPECT_EQ(j["entries"][1][1]["den"], 4);
    EXPECT_FALSE(j["entries"][1][1].contains("rad"));
}

TEST(MatrixIO, ErrorsCarryLocation) {
    EXPECT_EQ(location_of("{\"d\": 1, \"entries\": [[{\"num\":0}]]}", false), "/entries/0/0");
    EXPECT_EQ(location_of("{\"d\": 1, \"entries\": [[{\"num\":0, \"den\":0}]]}", false), "/entries/0/0/den");
    EXPECT_EQ(location_of("{\"d\": 2, \"entries\": [[{\"rad\":0}]]}", false), "/entries");
    EXPECT_EQ(location_of("{\"d\": 0, \"entries\": []}", false), "/d");
    EXPECT_EQ(location_of("{\"d\": 1}", false), "");
    EXPECT_EQ(location_of("{\"d\": 1, \"entries\": [[{\"rad\":\"x\"}]]}", false), "/entries/0/0/rad");
    EXPECT_EQ(location_of("{\"d\": 1, \"entries\": [[{\"rad\":1, \"num\":0, \"den\":1}]]}", false), "/entries/0/0");
    EXPECT_EQ(location_of("{\"d\": 1, \"entries\": [[", false).rfind("byte ", 0), 0u);
}

TEST(FamilyIO, RoundTrip) {
    chm::AffineFamily f = chm::fourier_family_even(6);
    EXPECT_EQ(chm::parse_family(chm::family_to_json(f).dump()), f);
    chm::AffineFamily h = chm::scenarios::h12_family();
    EXPECT_EQ(chm::parse_family(chm::family_to_json(h).dump(2)), h);
}

TEST(FamilyIO, SchemaViolations) {
    auto j = chm::family_to_json(chm::fourier_family_even(4));
    auto bad = j;
    bad["params"][0]["coeffs"][1][1] = 1.5;
    EXPECT_EQ(location_of(bad.dump(), true), "/params/0/coeffs/1/1");

    bad = j;
    bad["params"][0]["coeffs"].erase(3);
    EXPECT_EQ(location_of(bad.dump(), true), "/params/0/coeffs");

    bad = j;
    bad["params"][0]["coeffs"][2].push_back(0);
    EXPECT_EQ(location_of(bad.dump(), true), "/params/0/coeffs/2");

    bad = j;
    bad["params"].push_back(bad["params"][0]);
    EXPECT_EQ(location_of(bad.dump(), true), "/params/1/name");

    bad = j;
    bad["base"]["d"] = "four";
    EXPECT_EQ(location_of(bad.dump(), true), "/base/d");

    bad = j;
    bad.erase("params");
    EXPECT_EQ(location_of(bad.dump(), true), "");
}

TEST(Reports, Shapes) {
    auto e = chm::eta_to_json(chm::eta_counts(chm::fourier(6)));
    EXPECT_EQ(e, (chm::json{{"c", 3}, {"r", 3}, {"c_bar", 3}, {"r_bar", 3}}));
    auto pairs = chm::pairs_to_json(chm::find_er_pairs(chm::fourier(4), chm::Axis::Columns));
    EXPECT_EQ(pairs[1]["a"], 1);
    EXPECT_EQ(pairs[1]["b"], 3);
    EXPECT_EQ(pairs[1]["label"], "{2,4}");
    auto d = chm::defect_to_json(chm::defect(chm::fourier(4)));
    EXPECT_EQ(d["defect"], 1);
    EXPECT_EQ(d["method"], "exact");
}
