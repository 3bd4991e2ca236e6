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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace chm {

/// Small undirected simple graph on vertices 0..n-1 (adjacency matrix).
class Graph {
   public:
    explicit Graph(size_t n = 0) : n_(n), adj_(n * n, false) {}

    size_t size() const { return n_; }
    bool has_edge(size_t a, size_t b) const { return adj_[a * n_ + b]; }
    void add_edge(size_t a, size_t b) {
        if (a == b) return;
        adj_[a * n_ + b] = adj_[b * n_ + a] = true;
    }
    size_t edge_count() const {
        size_t c = 0;
        for (size_t a = 0; a < n_; ++a)
            for (size_t b = a + 1; b < n_; ++b) c += has_edge(a, b);
        return c;
    }

   private:
    size_t n_;
    std::vector<bool> adj_;
};

using Matching = std::vector<std::pair<size_t, size_t>>;

/// Size of a maximum matching in a general graph (Edmonds' blossom algorithm).
inline size_t maximum_matching_size(const Graph &g) {
    const size_t n = g.size();
    constexpr size_t kNone = static_cast<size_t>(-1);
    std::vector<size_t> match(n, kNone), parent(n), base(n);
    std::vector<bool> used(n), blossom(n);

    auto lca = [&](size_t a, size_t b) {
        std::vector<bool> seen(n, false);
        while (true) {
            a = base[a];
            seen[a] = true;
            if (match[a] == kNone) break;
            a = parent[match[a]];
        }
        while (true) {
            b = base[b];
            if (seen[b]) return b;
            b = parent[match[b]];
        }
    };
    auto mark_path = [&](size_t v, size_t b, size_t child) {
        while (base[v] != b) {
            blossom[base[v]] = blossom[base[match[v]]] = true;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    };
    auto find_path = [&](size_t root) -> size_t {
        std::fill(used.begin(), used.end(), false);
        std::fill(parent.begin(), parent.end(), kNone);
        for (size_t i = 0; i < n; ++i) base[i] = i;
        used[root] = true;
        std::queue<size_t> q;
        q.push(root);
        while (!q.empty()) {
            size_t v = q.front();
            q.pop();
            for (size_t to = 0; to < n; ++to) {
                if (!g.has_edge(v, to)) continue;
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != kNone && parent[match[to]] != kNone)) {
                    size_t cur = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), false);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (size_t i = 0; i < n; ++i) {
                        if (blossom[base[i]]) {
                            base[i] = cur;
                            if (!used[i]) {
                                used[i] = true;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent[to] == kNone) {
                    parent[to] = v;
                    if (match[to] == kNone) return to;
                    used[match[to]] = true;
                    q.push(match[to]);
                }
            }
        }
        return kNone;
    };

    size_t size = 0;
    for (size_t v = 0; v < n; ++v) {
        if (match[v] != kNone) continue;
        size_t u = find_path(v);
        if (u == kNone) continue;
        ++size;
        while (u != kNone) {
            size_t pv = parent[u], ppv = match[pv];
            match[u] = pv;
            match[pv] = u;
            u = ppv;
        }
    }
    return size;
}

/// Calls `visit` for every perfect matching of `g`, pairs sorted by their
/// smaller vertex. Enumeration stops early when `visit` returns false.
/// Returns the number of matchings visited.
inline uint64_t for_each_perfect_matching(const Graph &g, const std::function<bool(const Matching &)> &visit) {
    const size_t n = g.size();
    if (n % 2 != 0) return 0;
    std::vector<bool> taken(n, false);
    Matching current;
    uint64_t count = 0;
    bool stop = false;
    std::function<void()> rec = [&] {
        if (stop) return;
        size_t a = 0;
        while (a < n && taken[a]) ++a;
        if (a == n) {
            ++count;
            if (!visit(current)) stop = true;
            return;
        }
        taken[a] = true;
        for (size_t b = a + 1; b < n && !stop; ++b) {
            if (taken[b] || !g.has_edge(a, b)) continue;
            taken[b] = true;
            current.emplace_back(a, b);
            rec();
            current.pop_back();
            taken[b] = false;
        }
        taken[a] = false;
    };
    rec();
    return count;
}

/// Number of perfect matchings, by memoized recursion over vertex subsets
/// (n <= 64).
inline uint64_t count_perfect_matchings(const Graph &g) {
    const size_t n = g.size();
    if (n % 2 != 0) return 0;
    if (n > 64) throw std::invalid_argument("count_perfect_matchings: at most 64 vertices");
    std::unordered_map<uint64_t, uint64_t> memo;
    std::function<uint64_t(uint64_t)> rec = [&](uint64_t free) -> uint64_t {
        if (free == 0) return 1;
        if (auto it = memo.find(free); it != memo.end()) return it->second;
        size_t a = static_cast<size_t>(__builtin_ctzll(free));
        uint64_t rest = free & ~(uint64_t{1} << a);
        uint64_t total = 0;
        for (uint64_t m = rest; m; m &= m - 1) {
            size_t b = static_cast<size_t>(__builtin_ctzll(m));
            if (g.has_edge(a, b)) total += rec(rest & ~(uint64_t{1} << b));
        }
        memo.emplace(free, total);
        return total;
    };
    uint64_t all = n == 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
    return rec(all);
}

/// All matchings of maximum cardinality (the empty matching when there are
/// no edges). Intended for the small, sparse graphs that arise once a family
/// restricts which pairs stay valid.
inline std::vector<Matching> maximum_matchings(const Graph &g) {
    const size_t n = g.size();
    const size_t target = maximum_matching_size(g);
    std::vector<Matching> out;
    std::vector<bool> taken(n, false);
    Matching current;
    std::function<void(size_t)> rec = [&](size_t a) {
        while (a < n && taken[a]) ++a;
        size_t remaining = 0;
        for (size_t v = a; v < n; ++v) remaining += !taken[v];
        if (current.size() + remaining / 2 < target) return;
        if (a == n) {
            if (current.size() == target) out.push_back(current);
            return;
        }
        taken[a] = true;
        for (size_t b = a + 1; b < n; ++b) {
            if (taken[b] || !g.has_edge(a, b)) continue;
            taken[b] = true;
            current.emplace_back(a, b);
            rec(a + 1);
            current.pop_back();
            taken[b] = false;
        }
        rec(a + 1);  // leave a unmatched
        taken[a] = false;
    };
    rec(0);
    return out;
}

}  // namespace chm
