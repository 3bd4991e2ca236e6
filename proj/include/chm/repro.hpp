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
#include <atomic>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "chm/catalog.hpp"
#include "chm/defect.hpp"
#include "chm/equivalence.hpp"
#include "chm/erpairs.hpp"
#include "chm/family.hpp"
#include "chm/io.hpp"
#include "chm/mub.hpp"
#include "chm/scenarios.hpp"

namespace chm::repro {

struct Result {
    std::string name;
    bool pass = false;
    json computed;
    json expected;
};

struct Options {
    uint64_t seed = 0;
    double tol = kDefaultTolerance;
};

using Runner = std::function<Result(const Options &)>;

namespace detail {

inline Result make(const std::string &name, json computed, json expected) {
    bool pass = computed == expected;
    return Result{name, pass, std::move(computed), std::move(expected)};
}

inline std::vector<double> uniform_angles(std::mt19937_64 &rng, size_t n) {
    std::vector<double> xi(n);
    for (auto &x : xi) x = kTwoPi * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return xi;
}

inline bool float_samples_hadamard(const AffineFamily &f, size_t samples, uint64_t seed, double tol) {
    std::mt19937_64 rng(seed);
    for (size_t s = 0; s < samples; ++s) {
        auto xi = uniform_angles(rng, f.size());
        if (!is_hadamard(sample(f, std::span<const double>(xi)), tol)) return false;
    }
    return true;
}

// Family whose parameter rank is the largest produced by injection into the
// Fourier matrix of order d.
inline AffineFamily fourier_maximal(size_t d) {
    if (d % 4 == 0 && d >= 8) return fourier_family_doubly_even(d);
    return fourier_family_even(d);
}

inline json family_summary(const AffineFamily &f, const Options &o, size_t samples = 50) {
    return json{{"raw_params", f.size()},
                {"param_rank", param_rank(f)},
                {"verify_exact", verify_exact(f, o.tol)},
                {"float_samples_hadamard", float_samples_hadamard(f, samples, o.seed, o.tol)}};
}

inline json family_expectation(size_t raw, size_t rank) {
    return json{{"raw_params", raw}, {"param_rank", rank}, {"verify_exact", true}, {"float_samples_hadamard", true}};
}

}  // namespace detail

inline Result eta_table(const Options &) {
    json computed = json::object(), expected = json::object();
    const std::pair<size_t, size_t> table[] = {{2, 0}, {4, 1}, {6, 2}, {8, 5}, {10, 4}, {12, 9}, {14, 6}, {16, 13}};
    for (auto [d, eta_max] : table) {
        EtaCounts e = eta_counts(fourier(d));
        computed[std::to_string(d)] = {{"eta", eta_to_json(e)}, {"eta_max", param_rank(detail::fourier_maximal(d))}};
        expected[std::to_string(d)] = {{"eta", eta_to_json({d / 2, d / 2, d / 2, d / 2})}, {"eta_max", eta_max}};
    }
    return detail::make("eta-table", computed, expected);
}

inline Result fourier_family(size_t d, const Options &o) {
    const std::string name = "f" + std::to_string(d) + "-family";
    if (d == 4 || d == 6) {
        return detail::make(name, detail::family_summary(fourier_family_even(d), o),
                            detail::family_expectation(d / 2 - 1, d / 2 - 1));
    }
    // Rows then columns, pairs (k, k + d/2) for k = 1..d/2-1.
    AffineFamily built = scenarios::fourier_rows_and_columns(d);
    json computed = detail::family_summary(built, o);
    AffineFamily extra = inject_pair(built, Axis::Columns, d / 2 - 1, d - 1, "extra", o.tol);
    computed["rank_with_last_column_pair_again"] = param_rank(extra);
    const size_t rank = d == 8 ? 5 : d == 12 ? 9 : 13;
    json expected = detail::family_expectation(d - 2, rank);
    expected["rank_with_last_column_pair_again"] = rank;
    return detail::make(name, computed, expected);
}

inline Result h8_enumeration(const Options &o) {
    const AffineFamily rows = scenarios::h8_row_family();
    std::vector<IndexPairs> found;
    enumerate_matchings(
        rows, Axis::Columns,
        [&](const Matching &m) {
            found.push_back(scenarios::normalized(m));
            return true;
        },
        o.tol);
    std::sort(found.begin(), found.end());
    auto reference = scenarios::h8_column_choices();
    std::sort(reference.begin(), reference.end());
    json ranks = json::array();
    bool all_verified = true;
    for (const auto &cols : found) {
        AffineFamily f = build_family(rows.base, scenarios::h8_row_pairs(), cols, o.tol);
        ranks.push_back(param_rank(f));
        all_verified = all_verified && verify_exact(f, o.tol);
    }
    const uint64_t row_matchings = count_matchings(rows.base, Axis::Rows, o.tol);
    json computed{{"row_matchings", row_matchings},
                  {"column_matchings", found.size()},
                  {"column_matchings_equal_C_A_to_C_I", found == reference},
                  {"ranks", ranks},
                  {"verify_exact", all_verified},
                  {"families", row_matchings * found.size()}};
    json expected{{"row_matchings", 105},
                  {"column_matchings", 9},
                  {"column_matchings_equal_C_A_to_C_I", true},
                  {"ranks", json(std::vector<int>(9, 5))},
                  {"verify_exact", true},
                  {"families", 945}};
    return detail::make("h8-enumeration", computed, expected);
}

inline Result h12_family(const Options &o) {
    return detail::make("h12-family", detail::family_summary(scenarios::h12_family(), o),
                        detail::family_expectation(8, 8));
}

inline Result h12_enumeration(const Options &o) {
    CombinedChoices c = count_combined_choices(catalog_get("H12"), o.tol);
    json computed{{"row_matchings", c.row_matchings}, {"combined", c.combined}};
    json expected{{"row_matchings", 10395}, {"combined", 46080}};
    return detail::make("h12-enumeration", computed, expected);
}

inline Result d12_membership(const Options &) {
    auto c = scenarios::d12_construction();
    json computed{{"base_hadamard", is_hadamard(c.base)},
                  {"sample_exact", c.sampled.is_exact()},
                  {"sample_hadamard", is_hadamard(c.sampled)},
                  {"equals_catalog_D12", c.matches}};
    json expected{{"base_hadamard", true}, {"sample_exact", true}, {"sample_hadamard", true}, {"equals_catalog_D12", true}};
    return detail::make("d12-membership", computed, expected);
}

inline Result h10w_family(const Options &o) {
    AffineFamily f = scenarios::h10w_row_family();
    json computed = detail::family_summary(f, o);
    EtaCounts e = eta_counts(f.base, o.tol);
    computed["eta_c"] = e.eta_c;
    computed["eta_r"] = e.eta_r;
    computed["valid_column_pairs_after_rows"] = valid_pair_graph(f, Axis::Columns, o.tol).edge_count();
    json expected = detail::family_expectation(5, 5);
    expected["eta_c"] = 5;
    expected["eta_r"] = 5;
    expected["valid_column_pairs_after_rows"] = 0;
    return detail::make("h10w-family", computed, expected);
}

inline Result defect_values(const Options &o) {
    json computed = json::object(), expected = json::object();
    auto both = [&](const std::string &key, const CHMatrix &h, size_t value) {
        auto e = defect(h, DefectMethod::ExactRational, o.tol);
        auto f = defect(h, DefectMethod::FloatSVD, o.tol);
        computed[key] = {{"exact", e.defect}, {"float", f.defect}};
        expected[key] = {{"exact", value}, {"float", value}};
    };
    both("F4", fourier(4), 1);
    both("F2xF2", kron(fourier(2), fourier(2)), 3);
    for (size_t p : {2, 3, 5, 7, 11, 13}) both("F" + std::to_string(p), fourier(p), 0);
    return detail::make("defect", computed, expected);
}

inline Result mub6_obstruction_scenario(const Options &o) {
    std::mt19937_64 rng(o.seed);
    AffineFamily f6 = fourier_family_even(6);
    std::vector<CHMatrix> set;
    for (int t = 0; t < 20; ++t) {
        auto xi = detail::uniform_angles(rng, 2);
        set.push_back(sample(f6, std::span<const double>(xi)));
    }
    MubReport rep = mub6_obstruction(set, o.tol);
    std::set<std::pair<size_t, size_t>> eta_values;
    for (const auto &e : rep.eta) eta_values.insert({e.eta_c, e.eta_r});
    json seen = json::array();
    for (auto [c, r] : eta_values) seen.push_back(json{{"eta_c", c}, {"eta_r", r}});
    json computed{{"flagged", rep.obstruction_hit.size()}, {"eta_values", seen}};
    json expected{{"flagged", 20}, {"eta_values", json::array({json{{"eta_c", 3}, {"eta_r", 3}}})}};
    return detail::make("mub6-obstruction", computed, expected);
}

inline Result odd_restriction(const Options &o) {
    json computed = json::object(), expected = json::object();
    for (size_t d : {3, 5, 7, 9}) {
        size_t rejected = 0, pairs = 0;
        for (size_t a = 0; a < d; ++a) {
            for (size_t b = a + 1; b < d; ++b) {
                ++pairs;
                try {
                    inject_pair(AffineFamily{fourier(d), {}}, Axis::Columns, a, b, "x", o.tol);
                } catch (const InjectionError &e) {
                    if (std::string(e.what()).find("not ER") != std::string::npos) ++rejected;
                }
            }
        }
        computed[std::to_string(d)] = rejected;
        expected[std::to_string(d)] = pairs;
    }
    return detail::make("odd-restriction", computed, expected);
}

inline Result invariance(const Options &o) {
    json computed = json::object(), expected = json::object();
    for (const auto &name : catalog_names()) {
        CHMatrix h = catalog_get(name);
        bool eta_ok = eta_equivalence_probe(h, 100, o.seed, o.tol);
        std::mt19937_64 rng(o.seed);
        Fingerprint ref = fingerprint(h, o.tol);
        bool fp_ok = true;
        for (int t = 0; t < 100 && fp_ok; ++t) {
            fp_ok = same_fingerprint(ref, fingerprint(random_move(h.dim(), rng).apply(h), o.tol), o.tol);
        }
        computed[name] = {{"eta", eta_ok}, {"fingerprint", fp_ok}};
        expected[name] = {{"eta", true}, {"fingerprint", true}};
    }
    return detail::make("invariance", computed, expected);
}

/// Scenario names in run order.
inline std::vector<std::pair<std::string, Runner>> registry() {
    return {
        {"eta-table", eta_table},
        {"f4-family", [](const Options &o) { return fourier_family(4, o); }},
        {"f6-family", [](const Options &o) { return fourier_family(6, o); }},
        {"f8-family", [](const Options &o) { return fourier_family(8, o); }},
        {"f12-family", [](const Options &o) { return fourier_family(12, o); }},
        {"f16-family", [](const Options &o) { return fourier_family(16, o); }},
        {"h8-enumeration", h8_enumeration},
        {"h12-family", h12_family},
        {"h12-enumeration", h12_enumeration},
        {"d12-membership", d12_membership},
        {"h10w-family", h10w_family},
        {"defect", defect_values},
        {"mub6-obstruction", mub6_obstruction_scenario},
        {"odd-restriction", odd_restriction},
        {"invariance", invariance},
    };
}

inline std::vector<std::string> scenario_names() {
    std::vector<std::string> out;
    for (auto &[name, fn] : registry()) out.push_back(name);
    return out;
}

class UnknownScenario : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Runs the named scenarios on up to `jobs` threads; results come back in
/// the order of `names`.
inline std::vector<Result> run(const std::vector<std::string> &names, const Options &o, size_t jobs = 1) {
    auto reg = registry();
    std::vector<Runner> runners;
    for (const auto &n : names) {
        auto it = std::find_if(reg.begin(), reg.end(), [&](const auto &e) { return e.first == n; });
        if (it == reg.end()) throw UnknownScenario("unknown scenario '" + n + "'");
        runners.push_back(it->second);
    }
    std::vector<Result> out(runners.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t k; (k = next++) < runners.size();) out[k] = runners[k](o);
    };
    jobs = std::clamp<size_t>(jobs, 1, std::max<size_t>(1, runners.size()));
    std::vector<std::thread> pool;
    for (size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto &th : pool) th.join();
    return out;
}

inline json result_to_json(const Result &r) {
    return json{{"scenario", r.name}, {"status", r.pass ? "PASS" : "FAIL"}, {"computed", r.computed},
                {"expected", r.expected}};
}

}  // namespace chm::repro
