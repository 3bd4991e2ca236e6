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

// Command line front end. Every command prints JSON (one document per line
// unless --pretty) and exits 0 on success, 1 on a domain error, 2 on a usage
// error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chm/chm.hpp"

namespace {

using chm::json;

struct Globals {
    bool pretty = false;
    double tol = chm::kDefaultTolerance;
    uint64_t seed = 0;
};

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

void emit(const Globals &g, const json &j) { std::cout << (g.pretty ? j.dump(2) : j.dump()) << "\n"; }

std::string read_input(const std::string &path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    return chm::detail::read_file(path);
}

chm::CHMatrix load_matrix(const std::string &path) { return chm::parse_matrix(read_input(path)); }

// Accepts a family file, or a bare matrix (an empty family over it).
chm::AffineFamily load_family(const std::string &path) {
    json j = chm::detail::parse_text(read_input(path));
    if (j.is_object() && j.contains("base")) return chm::family_from_json(j);
    return chm::AffineFamily{chm::matrix_from_json(j), {}};
}

chm::Axis parse_axis(const std::string &s) {
    if (s == "cols" || s == "columns") return chm::Axis::Columns;
    if (s == "rows") return chm::Axis::Rows;
    throw UsageError("axis must be cols or rows");
}

// "1,5;2,6" -> {(1,5),(2,6)}, shifted to 0-based when one_based is set.
chm::IndexPairs parse_pairs(const std::string &text, bool one_based) {
    chm::IndexPairs out;
    std::stringstream all(text);
    std::string item;
    while (std::getline(all, item, ';')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        std::stringstream one(item);
        long a = -1, b = -1;
        char comma = 0;
        if (!(one >> a >> comma >> b) || comma != ',' || !(one >> std::ws).eof())
            throw UsageError("bad pair '" + item + "' (expected a,b)");
        long shift = one_based ? 1 : 0;
        if (a < shift || b < shift) throw UsageError("pair index out of range in '" + item + "'");
        out.emplace_back(static_cast<size_t>(a - shift), static_cast<size_t>(b - shift));
    }
    return out;
}

json labelled_pairs(const chm::IndexPairs &pairs) {
    json out = json::array();
    for (auto [a, b] : pairs)
        out.push_back(json{{"a", a}, {"b", b}, {"label", "{" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "}"}});
    return out;
}

std::vector<double> parse_reals(const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        size_t used = 0;
        double v = 0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception &) {
            throw UsageError("bad number '" + item + "'");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos) throw UsageError("bad number '" + item + "'");
        out.push_back(v);
    }
    return out;
}

}  // namespace

int main(int argc, char **argv) {
    Globals g;
    if (const char *env = std::getenv("CHM_TOL")) {
        try {
            g.tol = std::stod(env);
        } catch (const std::exception &) {
            std::cerr << "error: CHM_TOL is not a number\n";
            return 2;
        }
    }

    CLI::App app{"Complex Hadamard matrices: ER pairs, affine families, defect, invariants"};
    app.require_subcommand(1);
    app.add_flag("--pretty", g.pretty, "Indented JSON instead of JSON lines");
    app.add_option("--tol", g.tol, "Float tolerance (default 1e-9, or CHM_TOL)");
    app.add_option("--seed", g.seed, "Seed for randomized checks");

    std::function<void()> action;

    // gen
    auto *gen = app.add_subcommand("gen", "Generate a matrix");
    gen->require_subcommand(1);
    size_t gen_d = 0;
    auto *gen_fourier = gen->add_subcommand("fourier", "Fourier matrix F_d");
    gen_fourier->add_option("--d", gen_d, "Dimension")->required()->check(CLI::Range(1, 4096));
    gen_fourier->callback([&] { action = [&] { emit(g, chm::matrix_to_json(chm::fourier(gen_d))); }; });

    // catalog
    auto *cat = app.add_subcommand("catalog", "Built-in matrices");
    cat->require_subcommand(1);
    std::string cat_name;
    auto *cat_get = cat->add_subcommand("get", "Print a catalog matrix (H8, H12, H10w, D12, F<d>)");
    cat_get->add_option("name", cat_name)->required();
    cat_get->callback([&] { action = [&] { emit(g, chm::matrix_to_json(chm::catalog_get(cat_name))); }; });
    auto *cat_list = cat->add_subcommand("list", "List catalog names");
    cat_list->callback([&] {
        action = [&] {
            json out = json::array();
            for (const auto &n : chm::catalog_names())
                out.push_back(json{{"name", n}, {"notes", chm::catalog_entry(n).notes}});
            out.push_back(json{{"name", "F<d>"}, {"notes", "Fourier matrix of order d, 1 <= d <= 4096"}});
            emit(g, out);
        };
    });

    // er-pairs
    std::string er_file, er_axis = "cols";
    auto *er = app.add_subcommand("er-pairs", "ER pairs along one axis, and eta counts");
    er->add_option("file", er_file, "CHM-JSON matrix, - for stdin")->required();
    er->add_option("--axis", er_axis, "cols or rows");
    er->callback([&] {
        action = [&] {
            auto h = load_matrix(er_file);
            auto axis = parse_axis(er_axis);
            emit(g, json{{"axis", chm::axis_name(axis)},
                         {"pairs", chm::pairs_to_json(chm::find_er_pairs(h, axis, g.tol))},
                         {"eta", chm::eta_to_json(chm::eta_counts(h, g.tol))}});
        };
    });

    // invariants
    std::string inv_file;
    auto *inv = app.add_subcommand("invariants", "Hadamard check, eta counts, Sylvester block form");
    inv->add_option("file", inv_file)->required();
    inv->callback([&] {
        action = [&] {
            auto h = load_matrix(inv_file);
            json out{{"d", h.dim()}, {"exact", h.is_exact()}, {"hadamard", chm::is_hadamard(h, g.tol)}};
            out["eta"] = chm::eta_to_json(chm::eta_counts(chm::dephase(h), g.tol));
            auto w = chm::sylvester_detect(chm::dephase(h), g.tol);
            out["sylvester"] = w ? json{{"row_perm", w->row_perm}, {"col_perm", w->col_perm},
                                        {"negate_row", w->negate_row}}
                                 : json(nullptr);
            emit(g, out);
        };
    });

    // family
    auto *fam = app.add_subcommand("family", "Affine families");
    fam->require_subcommand(1);
    std::string fb_input, fb_rows, fb_cols;
    bool one_based = false;
    auto *fb = fam->add_subcommand("build", "Inject row pairs, then column pairs");
    fb->add_option("--input", fb_input, "CHM-JSON base matrix")->required();
    fb->add_option("--rows", fb_rows, "Row pairs, e.g. \"1,5;2,6\"");
    fb->add_option("--cols", fb_cols, "Column pairs");
    fb->add_flag("--one-based", one_based, "Indices start at 1");
    fb->callback([&] {
        action = [&] {
            auto rows = parse_pairs(fb_rows, one_based);
            auto cols = parse_pairs(fb_cols, one_based);
            auto f = chm::build_family(load_matrix(fb_input), rows, cols, g.tol);
            json out = chm::family_to_json(f);
            out["pairs"] = json{{"rows", labelled_pairs(rows)}, {"cols", labelled_pairs(cols)}};
            emit(g, out);
        };
    });

    std::string fr_file;
    auto *fr = fam->add_subcommand("rank", "Independent parameters after dephasing");
    fr->add_option("file", fr_file)->required();
    fr->callback([&] {
        action = [&] {
            auto f = load_family(fr_file);
            emit(g, json{{"raw_params", f.size()}, {"param_rank", chm::param_rank(f)}});
        };
    });

    std::string fv_file;
    size_t fv_samples = 50;
    bool fv_exact_only = false;
    auto *fv = fam->add_subcommand("verify", "Exact verification plus random float samples");
    fv->add_option("file", fv_file)->required();
    fv->add_option("--samples", fv_samples, "Number of float samples");
    fv->add_flag("--exact", fv_exact_only, "Skip float samples");
    fv->callback([&] {
        action = [&] {
            auto f = load_family(fv_file);
            json out{{"verify_exact", chm::verify_exact(f, g.tol)}};
            if (!fv_exact_only) {
                out["samples"] = fv_samples;
                out["float_samples_hadamard"] = chm::repro::detail::float_samples_hadamard(f, fv_samples, g.seed, g.tol);
            }
            emit(g, out);
        };
    });

    std::string fs_file, fs_xi;
    auto *fs = fam->add_subcommand("sample", "Family member at xi (radians)");
    fs->add_option("file", fs_file)->required();
    fs->add_option("--xi", fs_xi, "Comma-separated angles")->required();
    fs->callback([&] {
        action = [&] {
            auto f = load_family(fs_file);
            auto xi = parse_reals(fs_xi);
            if (xi.size() != f.size())
                throw UsageError("--xi has " + std::to_string(xi.size()) + " values, family has " +
                                 std::to_string(f.size()) + " parameters");
            emit(g, chm::matrix_to_json(chm::sample(f, std::span<const double>(xi))));
        };
    });

    std::string fe_file, fe_axis = "rows";
    bool fe_count_only = false;
    auto *fe = fam->add_subcommand("enumerate", "Perfect matchings into pairs valid in the family");
    fe->add_option("file", fe_file, "Matrix or family")->required();
    fe->add_option("--axis", fe_axis, "cols or rows");
    fe->add_flag("--count-only", fe_count_only, "Print only the count");
    fe->callback([&] {
        action = [&] {
            auto f = load_family(fe_file);
            auto axis = parse_axis(fe_axis);
            if (fe_count_only) {
                emit(g, json{{"axis", chm::axis_name(axis)}, {"count", chm::count_matchings(f, axis, g.tol)}});
                return;
            }
            uint64_t n = chm::enumerate_matchings(
                f, axis,
                [&](const chm::Matching &m) {
                    emit(g, json{{"pairs", labelled_pairs(m)}});
                    return true;
                },
                g.tol);
            emit(g, json{{"axis", chm::axis_name(axis)}, {"count", n}});
        };
    });

    // defect
    std::string df_file, df_method = "auto";
    auto *df = app.add_subcommand("defect", "Defect of a complex Hadamard matrix");
    df->add_option("file", df_file)->required();
    df->add_option("--method", df_method, "auto, exact or float")->check(CLI::IsMember({"auto", "exact", "float"}));
    df->callback([&] {
        action = [&] {
            emit(g, chm::defect_to_json(chm::defect(load_matrix(df_file), chm::parse_defect_method(df_method), g.tol)));
        };
    });

    // equiv
    auto *eq = app.add_subcommand("equiv", "Equivalence invariants");
    eq->require_subcommand(1);
    std::string ef_file;
    auto *ef = eq->add_subcommand("fingerprint", "Invariant fingerprint");
    ef->add_option("file", ef_file)->required();
    ef->callback([&] { action = [&] { emit(g, chm::fingerprint_to_json(chm::fingerprint(load_matrix(ef_file), g.tol))); }; });
    std::string ed_a, ed_b;
    auto *ed = eq->add_subcommand("distinguish", "Certify inequivalence if an invariant differs");
    ed->add_option("a", ed_a)->required();
    ed->add_option("b", ed_b)->required();
    ed->callback([&] {
        action = [&] {
            auto r = chm::distinguish(load_matrix(ed_a), load_matrix(ed_b), g.tol);
            emit(g, json{{"verdict", chm::verdict_name(r.verdict)}, {"reason", r.reason}});
        };
    });

    // mub
    auto *mub = app.add_subcommand("mub", "Mutually unbiased bases");
    mub->require_subcommand(1);
    std::vector<std::string> mub_files;
    auto *mc = mub->add_subcommand("check", "Pairwise MU check and the order-6 ER-pair obstruction");
    mc->add_option("files", mub_files)->required();
    mc->callback([&] {
        action = [&] {
            std::vector<chm::CHMatrix> set;
            for (const auto &f : mub_files) set.push_back(load_matrix(f));
            bool six = !set.empty() && std::all_of(set.begin(), set.end(), [](const auto &h) { return h.dim() == 6; });
            if (six) {
                emit(g, chm::mub_to_json(chm::mub6_obstruction(set, g.tol)));
                return;
            }
            json pairwise = json::array();
            for (const auto &a : set) {
                json row = json::array();
                for (const auto &b : set) row.push_back(chm::is_mu_pair(a, b, g.tol));
                pairwise.push_back(row);
            }
            emit(g, json{{"pairwise_mu", pairwise}});
        };
    });

    // repro
    std::string rp_name;
    bool rp_all = false, rp_list = false;
    size_t rp_jobs = 1;
    auto *rp = app.add_subcommand("repro", "Scripted reproductions; PASS/FAIL with computed and expected values");
    rp->add_option("scenario", rp_name);
    rp->add_flag("--all", rp_all, "Run every scenario");
    rp->add_flag("--list", rp_list, "List scenario names");
    rp->add_option("--jobs", rp_jobs, "Worker threads")->check(CLI::Range(1, 256));
    int repro_status = 0;
    rp->callback([&] {
        action = [&] {
            if (rp_list) {
                emit(g, chm::repro::scenario_names());
                return;
            }
            std::vector<std::string> names;
            if (rp_all) {
                names = chm::repro::scenario_names();
            } else if (!rp_name.empty()) {
                names = {rp_name};
            } else {
                throw UsageError("repro needs a scenario name, --all or --list");
            }
            for (const auto &r : chm::repro::run(names, {g.seed, g.tol}, rp_jobs)) {
                emit(g, chm::repro::result_to_json(r));
                if (!r.pass) repro_status = 1;
            }
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (action) action();
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const chm::repro::UnknownScenario &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return repro_status;
}
