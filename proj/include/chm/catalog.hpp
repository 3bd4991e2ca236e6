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

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chm/matrix.hpp"

namespace chm {

class NotFound : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct CatalogEntry {
    std::string name;
    CHMatrix matrix;
    std::string notes;
};

namespace detail {

// Whitespace separated tokens, row by row. Tokens: 1 -1 i -i w w2 -w -w2,
// where w = e^{2 pi i/3}.
inline CHMatrix parse_table(size_t d, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<Phase> entries;
    std::string tok;
    while (in >> tok) {
        if (tok == "1") entries.push_back(Phase::one());
        else if (tok == "-1") entries.push_back(Phase::exact(1, 2));
        else if (tok == "i") entries.push_back(Phase::exact(1, 4));
        else if (tok == "-i") entries.push_back(Phase::exact(3, 4));
        else if (tok == "w") entries.push_back(Phase::exact(1, 3));
        else if (tok == "w2") entries.push_back(Phase::exact(2, 3));
        else if (tok == "-w") entries.push_back(Phase::exact(5, 6));
        else if (tok == "-w2") entries.push_back(Phase::exact(1, 6));
        else throw std::logic_error("bad catalog token " + tok);
    }
    return CHMatrix(d, std::move(entries));
}

inline constexpr std::string_view kH8 = R"(
 1  1  1  1  1  1  1  1
 1  1 -1  1 -1 -1  1 -1
 1  1  1 -1 -1 -1 -1  1
 1 -1  1  1 -1  1 -1 -1
 1 -1  1 -1  1 -1  1 -1
 1 -1 -1  1  1 -1 -1  1
 1  1 -1 -1  1  1 -1 -1
 1 -1 -1 -1 -1  1  1  1
)";

inline constexpr std::string_view kH12 = R"(
 1  1  1  1  1  1  1  1  1  1  1  1
 1  1  1  1  1  1 -1 -1 -1 -1 -1 -1
 1 -1  1  1 -1 -1  1  1 -1  1 -1 -1
 1 -1  1 -1  1 -1 -1  1  1 -1  1 -1
 1 -1 -1  1 -1  1 -1  1  1 -1 -1  1
 1  1  1 -1 -1 -1  1 -1  1 -1 -1  1
 1  1 -1 -1  1 -1 -1  1 -1  1 -1  1
 1  1 -1  1 -1 -1 -1 -1  1  1  1 -1
 1 -1  1 -1 -1  1 -1 -1 -1  1  1  1
 1  1 -1 -1 -1  1  1  1 -1 -1  1 -1
 1 -1 -1 -1  1  1  1 -1  1  1 -1 -1
 1 -1 -1  1  1 -1  1 -1 -1 -1  1  1
)";

inline constexpr std::string_view kH10w = R"(
 1   1   1   1   1   1   1   1   1   1
 1   1   1   w   w2 -1  -1   1   w2  w
 1   1   1   w2  w  -1   1  -1   w   w2
 1   w   w2  1   1  -1   w2  w  -1   1
 1   w2  w   1   1  -1   w   w2  1  -1
 1   w2  w   1  -1   1  -w  -w2 -1  -1
 1  -1   1   w   w2  1  -1  -1  -w2 -w
 1   1  -1   w2  w   1  -1  -1  -w  -w2
 1   w   w2 -1   1   1  -w2 -w  -1  -1
 1  -1  -1  -1  -1  -1   1   1   1   1
)";

inline constexpr std::string_view kD12 = R"(
 1  1  1  1  1  1  1  1  1  1  1  1
 1  i  i  i -i -i -i -1  1  1 -1 -1
 1  i  i -i  i -i -i  1 -1 -1  1 -1
 1  i -i  i -i  i -i  1 -1 -1 -1  1
 1 -i  i -i  i  i -i -1  1 -1 -1  1
 1 -i -i  i  i  i -i -1 -1  1  1 -1
 1 -i -i  i  i -i  i  1  1 -1 -1 -1
 1 -i  i  i -i -i  i -1 -1 -1  1  1
 1  i -i -i  i -i  i -1 -1  1 -1  1
 1  i -i -i -i  i  i -1  1 -1  1 -1
 1 -i  i -i -i  i  i  1 -1  1 -1 -1
 1 -1 -1 -1 -1 -1 -1  1  1  1  1  1
)";

}  // namespace detail

/// Names of the fixed catalog entries (Fourier matrices are "F<d>").
inline std::vector<std::string> catalog_names() { return {"H8", "H12", "H10w", "D12"}; }

inline CatalogEntry catalog_entry(const std::string &name) {
    if (name == "H8") return {name, detail::parse_table(8, detail::kH8), "real Hadamard matrix of order 8, dephased"};
    if (name == "H12")
        return {name, detail::parse_table(12, detail::kH12), "real Hadamard matrix of order 12, dephased"};
    if (name == "H10w")
        return {name, detail::parse_table(10, detail::kH10w),
                "order-10 matrix over {+-1, +-w, +-w^2}, w = e^{2 pi i/3}"};
    if (name == "D12")
        return {name, detail::parse_table(12, detail::kD12), "order-12 matrix over {+-1, +-i}, dephased"};
    if (name.size() > 1 && name[0] == 'F') {
        size_t d = 0;
        auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), d);
        if (ec == std::errc() && ptr == name.data() + name.size() && d >= 1 && d <= 4096) {
            return {name, fourier(d), "Fourier matrix of order " + std::to_string(d)};
        }
    }
    throw NotFound("unknown catalog matrix '" + name + "'");
}

inline CHMatrix catalog_get(const std::string &name) { return catalog_entry(name).matrix; }

}  // namespace chm
