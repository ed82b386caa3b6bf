#pragma once
// Shared helpers for the test binaries. The ref_* functions and the matching
// enumerator are deliberately written from scratch (adjacency matrices, plain
// loops) so that library results are always checked against a second,
// independent route.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "mcut/colouring.hpp"
#include "mcut/graph.hpp"

namespace testutil {

using mcut::Colour;
using mcut::Colouring;
using mcut::Graph;

// ---------------------------------------------------------------------------
// Named graphs

inline Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

inline Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

inline Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

// Classes 0..a-1 and a..a+b-1.
inline Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph(a + b, e);
}

// Centre 0.
inline Graph star(int leaves) { return complete_bipartite(1, leaves); }

// Q3: vertices are the 3-bit strings, edges join strings at Hamming distance 1.
inline Graph cube() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 8; ++i)
        for (int b = 0; b < 3; ++b)
            if (i < (i ^ (1 << b))) e.emplace_back(i, i ^ (1 << b));
    return Graph(8, e);
}

// ---------------------------------------------------------------------------
// Reference verifiers (independent of the library implementations)

inline int ref_value(const Graph& g, const Colouring& c) {
    int v = 0;
    for (auto [x, y] : g.edges())
        if (c[x] != c[y]) ++v;
    return v;
}

inline int ref_opposite_count(const Graph& g, const Colouring& c, int v) {
    int cnt = 0;
    for (int w : g.neighbours(v))
        if (c[w] != c[v]) ++cnt;
    return cnt;
}

inline bool ref_uses_both(const Colouring& c) {
    bool r = false, b = false;
    for (Colour x : c) (x == Colour::Red ? r : b) = true;
    return r && b;
}

inline bool ref_valid(const Graph& g, const Colouring& c, int d) {
    if (!ref_uses_both(c)) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (ref_opposite_count(g, c, v) > d) return false;
    return true;
}

inline bool ref_perfect(const Graph& g, const Colouring& c) {
    if (!ref_uses_both(c)) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (ref_opposite_count(g, c, v) != 1) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Perfect matchings by explicit enumeration (works on any graph)

namespace detail {

template <class F>
bool pm_walk(const Graph& g, std::vector<char>& used, std::vector<std::pair<int, int>>& acc,
             F&& fn) {
    const int n = g.vertex_count();
    int v = 0;
    while (v < n && used[v]) ++v;
    if (v == n) return fn(acc);
    used[v] = 1;
    for (int w : g.neighbours(v)) {
        if (used[w]) continue;
        used[w] = 1;
        acc.emplace_back(v, w);
        if (pm_walk(g, used, acc, fn)) {
            acc.pop_back();
            used[w] = 0;
            used[v] = 0;
            return true;
        }
        acc.pop_back();
        used[w] = 0;
    }
    used[v] = 0;
    return false;
}

}  // namespace detail

// Calls fn on every perfect matching (as a list of edges, lowest free vertex
// matched first). fn returning true stops the walk; returns whether it did.
template <class F>
bool for_each_perfect_matching(const Graph& g, F&& fn) {
    if (g.vertex_count() % 2 == 1) return false;
    std::vector<char> used(g.vertex_count(), 0);
    std::vector<std::pair<int, int>> acc;
    return detail::pm_walk(g, used, acc, fn);
}

inline long long count_perfect_matchings(const Graph& g) {
    long long cnt = 0;
    for_each_perfect_matching(g, [&](const auto&) {
        ++cnt;
        return false;
    });
    return cnt;
}

// True iff some perfect matching contains every bichromatic edge of c.
// Requires nothing of c beyond length; intended for valid 1-colourings, where
// the bichromatic edges form a matching.
inline bool ref_extendable(const Graph& g, const Colouring& c) {
    const int n = g.vertex_count();
    if (n % 2 == 1) return false;
    std::vector<char> covered(n, 0);
    for (auto [x, y] : g.edges()) {
        if (c[x] == c[y]) continue;
        if (covered[x] || covered[y]) return false;  // not a matching
        covered[x] = covered[y] = 1;
    }
    // Remains: a perfect matching of the graph minus the covered vertices.
    std::vector<int> keep, back(n, -1);
    for (int v = 0; v < n; ++v)
        if (!covered[v]) {
            back[v] = static_cast<int>(keep.size());
            keep.push_back(v);
        }
    std::vector<std::pair<int, int>> re;
    for (auto [x, y] : g.edges())
        if (!covered[x] && !covered[y]) re.emplace_back(back[x], back[y]);
    Graph residual(static_cast<int>(keep.size()), re);
    bool found = for_each_perfect_matching(residual, [](const auto&) { return true; });
    return found;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration aggregates

template <class F>
void for_each_colouring(int n, F&& fn) {
    Colouring c(n, Colour::Blue);
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        for (int v = 0; v < n; ++v)
            c[v] = (mask >> v & 1) ? Colour::Red : Colour::Blue;
        fn(std::as_const(c));
    }
}

struct ReferenceReport {
    bool has_mc = false;
    int max_mc = -1;
    int min_mc = -1;
    bool has_pmc = false;
    long long perfect_count = 0;  // perfect colourings with vertex 0 red
    bool has_dpm = false;
    int max_dpm = -1;
    std::vector<bool> has_dcut;
};

// Full 2^n sweep with the reference verifiers; the baseline the oracle and
// solver modules are compared against.
inline ReferenceReport reference_report(const Graph& g, int d_max) {
    ReferenceReport r;
    r.has_dcut.assign(d_max, false);
    for_each_colouring(g.vertex_count(), [&](const Colouring& c) {
        for (int d = 1; d <= d_max; ++d)
            if (ref_valid(g, c, d)) r.has_dcut[d - 1] = true;
        if (ref_valid(g, c, 1)) {
            r.has_mc = true;
            int v = ref_value(g, c);
            r.max_mc = std::max(r.max_mc, v);
            r.min_mc = r.min_mc == -1 ? v : std::min(r.min_mc, v);
            if (ref_extendable(g, c)) {
                r.has_dpm = true;
                r.max_dpm = std::max(r.max_dpm, v);
            }
        }
        if (ref_perfect(g, c)) {
            r.has_pmc = true;
            if (c[0] == Colour::Red) ++r.perfect_count;
        }
    });
    return r;
}

// ---------------------------------------------------------------------------
// Graph corpora

// All graphs on n labelled vertices, one per edge subset.
template <class F>
void for_each_graph(int n, F&& fn) {
    std::vector<std::pair<int, int>> all;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
    const int m = static_cast<int>(all.size());
    std::vector<std::pair<int, int>> sel;
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        sel.clear();
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) sel.push_back(all[i]);
        fn(Graph(n, sel));
    }
}

// Random graph with the given edge probability (percent to keep the RNG
// stream integral and stable).
inline Graph random_graph(std::mt19937_64& rng, int n, int edge_percent) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (static_cast<int>(rng() % 100) < edge_percent) e.emplace_back(i, j);
    return Graph(n, e);
}

// Random connected bipartite graph: random class split A = [0,a), B = [a,n),
// random cross edges, plus a spanning chain so the result is connected.
inline Graph random_connected_bipartite(std::mt19937_64& rng, int n, int edge_percent) {
    int a = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = a; j < n; ++j)
            if (static_cast<int>(rng() % 100) < edge_percent) e.emplace_back(i, j);
    const int k = std::min(a, n - a);
    for (int i = 0; i < k; ++i) {
        e.emplace_back(i, a + i);
        if (i + 1 < k) e.emplace_back(i + 1, a + i);
    }
    for (int i = k; i < a; ++i) e.emplace_back(i, a);
    for (int j = a + k; j < n; ++j) e.emplace_back(0, j);
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return Graph(n, e);
}

}  // namespace testutil
