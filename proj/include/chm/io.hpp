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

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "chm/defect.hpp"
#include "chm/equivalence.hpp"
#include "chm/erpairs.hpp"
#include "chm/family.hpp"
#include "chm/matrix.hpp"
#include "chm/mub.hpp"
#include "json.hpp"

namespace chm {

using json = nlohmann::json;

/// Malformed input. `location` is a JSON pointer into the document, or
/// "byte N" for syntax errors.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string &location, const std::string &what)
        : std::runtime_error((location.empty() ? std::string("/") : location) + ": " + what), location_(location) {}
    const std::string &location() const { return location_; }

   private:
    std::string location_;
};

namespace detail {

inline const json &require(const json &j, const std::string &key, const std::string &path) {
    if (!j.is_object()) throw ParseError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(path, "missing key '" + key + "'");
    return *it;
}

inline int64_t require_int(const json &j, const std::string &path) {
    if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
    return j.get<int64_t>();
}

inline json parse_text(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError("byte " + std::to_string(e.byte), "syntax error");
    }
}

inline std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace detail

// ---------------------------------------------------------------- matrices

inline json phase_to_json(const Phase &p) {
    if (p.is_exact()) return json{{"num", p.num()}, {"den", p.den()}};
    return json{{"rad", p.angle()}};
}

inline Phase phase_from_json(const json &j, const std::string &path) {
    if (!j.is_object()) throw ParseError(path, "entry must be an object");
    const bool has_rad = j.contains("rad"), has_num = j.contains("num"), has_den = j.contains("den");
    if (has_rad && (has_num || has_den)) throw ParseError(path, "entry has both 'rad' and 'num'/'den'");
    if (has_rad) {
        if (!j["rad"].is_number()) throw ParseError(path + "/rad", "expected a number");
        double t = j["rad"].get<double>();
        if (!std::isfinite(t)) throw ParseError(path + "/rad", "angle must be finite");
        return Phase::radians(t);
    }
    if (!has_num || !has_den) throw ParseError(path, "entry needs 'num' and 'den', or 'rad'");
    int64_t num = detail::require_int(j["num"], path + "/num");
    int64_t den = detail::require_int(j["den"], path + "/den");
    if (den <= 0) throw ParseError(path + "/den", "denominator must be positive");
    return Phase::exact(num, den);
}

inline json matrix_to_json(const CHMatrix &h) {
    json rows = json::array();
    for (size_t i = 0; i < h.dim(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < h.dim(); ++j) row.push_back(phase_to_json(h(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"d", h.dim()}, {"entries", std::move(rows)}};
}

inline CHMatrix matrix_from_json(const json &j, const std::string &path = "") {
    int64_t d = detail::require_int(detail::require(j, "d", path), path + "/d");
    if (d < 1) throw ParseError(path + "/d", "dimension must be positive");
    const json &rows = detail::require(j, "entries", path);
    const std::string rp = path + "/entries";
    if (!rows.is_array() || rows.size() != static_cast<size_t>(d))
        throw ParseError(rp, "expected an array of " + std::to_string(d) + " rows");
    CHMatrix h(static_cast<size_t>(d));
    for (size_t i = 0; i < h.dim(); ++i) {
        const std::string ip = rp + "/" + std::to_string(i);
        if (!rows[i].is_array() || rows[i].size() != h.dim())
            throw ParseError(ip, "expected a row of " + std::to_string(d) + " entries");
        for (size_t k = 0; k < h.dim(); ++k) h(i, k) = phase_from_json(rows[i][k], ip + "/" + std::to_string(k));
    }
    return h;
}

inline CHMatrix parse_matrix(const std::string &text) { return matrix_from_json(detail::parse_text(text)); }

inline CHMatrix read_matrix_file(const std::string &path) { return parse_matrix(detail::read_file(path)); }

// ---------------------------------------------------------------- families

inline json family_to_json(const AffineFamily &f) {
    json params = json::array();
    for (const auto &p : f.params) {
        json rows = json::array();
        for (size_t i = 0; i < p.d; ++i) {
            json row = json::array();
            for (size_t k = 0; k < p.d; ++k) row.push_back(p(i, k));
            rows.push_back(std::move(row));
        }
        params.push_back(json{{"name", p.name}, {"coeffs", std::move(rows)}});
    }
    return json{{"base", matrix_to_json(f.base)}, {"params", std::move(params)}};
}

inline AffineFamily family_from_json(const json &j) {
    AffineFamily f{matrix_from_json(detail::require(j, "base", ""), "/base"), {}};
    const size_t d = f.dim();
    const json &params = detail::require(j, "params", "");
    if (!params.is_array()) throw ParseError("/params", "expected an array");
    std::set<std::string> names;
    for (size_t p = 0; p < params.size(); ++p) {
        const std::string pp = "/params/" + std::to_string(p);
        const json &name = detail::require(params[p], "name", pp);
        if (!name.is_string() || name.get<std::string>().empty())
            throw ParseError(pp + "/name", "expected a non-empty string");
        if (!names.insert(name.get<std::string>()).second)
            throw ParseError(pp + "/name", "duplicate parameter name '" + name.get<std::string>() + "'");
        const json &coeffs = detail::require(params[p], "coeffs", pp);
        if (!coeffs.is_array() || coeffs.size() != d)
            throw ParseError(pp + "/coeffs", "expected " + std::to_string(d) + " rows to match the base dimension");
        ParamPattern pat(name.get<std::string>(), d);
        for (size_t i = 0; i < d; ++i) {
            const std::string ip = pp + "/coeffs/" + std::to_string(i);
            if (!coeffs[i].is_array() || coeffs[i].size() != d)
                throw ParseError(ip, "expected " + std::to_string(d) + " coefficients to match the base dimension");
            for (size_t k = 0; k < d; ++k) {
                int64_t c = detail::require_int(coeffs[i][k], ip + "/" + std::to_string(k));
                if (c < INT32_MIN || c > INT32_MAX) throw ParseError(ip + "/" + std::to_string(k), "out of range");
                pat(i, k) = static_cast<int>(c);
            }
        }
        f.params.push_back(std::move(pat));
    }
    return f;
}

inline AffineFamily parse_family(const std::string &text) { return family_from_json(detail::parse_text(text)); }

inline AffineFamily read_family_file(const std::string &path) { return parse_family(detail::read_file(path)); }

// ---------------------------------------------------------------- reports

inline json eta_to_json(const EtaCounts &e) {
    return json{{"c", e.eta_c}, {"r", e.eta_r}, {"c_bar", e.eta_c_bar}, {"r_bar", e.eta_r_bar}};
}

inline json pairs_to_json(const std::vector<ERPair> &pairs, bool one_based_labels = true) {
    json out = json::array();
    for (const auto &p : pairs) {
        json s = json::array();
        for (auto x : p.signs) s.push_back(static_cast<int>(x));
        json item{{"a", p.a}, {"b", p.b}, {"signs", std::move(s)}};
        if (one_based_labels) item["label"] = "{" + std::to_string(p.a + 1) + "," + std::to_string(p.b + 1) + "}";
        out.push_back(std::move(item));
    }
    return out;
}

inline json index_pairs_to_json(const IndexPairs &pairs) {
    json out = json::array();
    for (auto [a, b] : pairs) out.push_back(json::array({a, b}));
    return out;
}

inline json defect_to_json(const DefectReport &r) {
    json j{{"defect", r.defect},
           {"rank", r.rank},
           {"system_rows", r.system_rows},
           {"system_cols", r.system_cols},
           {"method", defect_method_name(r.method)},
           {"upper_bound_only", r.upper_bound_only}};
    if (r.method == DefectMethod::ExactRational) j["primes_used"] = r.primes_used;
    return j;
}

inline json fingerprint_to_json(const Fingerprint &fp) {
    return json{{"d", fp.d}, {"eta", eta_to_json(fp.eta)}, {"cycles", fp.cycles}};
}

inline json mub_to_json(const MubReport &r) {
    json eta = json::array();
    for (const auto &e : r.eta) eta.push_back(eta_to_json(e));
    return json{{"pairwise_mu", r.pairwise_mu},
                {"eta", std::move(eta)},
                {"eta_zero", r.eta_zero},
                {"obstruction_hit", r.obstruction_hit}};
}

}  // namespace chm
