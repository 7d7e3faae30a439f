#pragma once
// Brute-force reference routines for the tests. Everything here enumerates
// or backtracks straight from the definitions and shares no code with the
// search machinery it is used to check.

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "rainbow/graph.hpp"

namespace oracle {

using rainbow::Colouring;
using rainbow::Edge;
using rainbow::Graph;

inline Graph complete(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(n, es);
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<Edge> es;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) es.emplace_back(u, a + v);
    return Graph(a + b, es);
}

// two disjoint cliques on {0..n/2-1} and {n/2..n-1}; n even
inline Graph two_cliques(int n) {
    int h = n / 2;
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((u < h) == (v < h)) es.emplace_back(u, v);
    return Graph(n, es);
}

// every directed Hamilton cycle, as a vertex order starting at 0
inline std::vector<std::vector<int>> directed_ham_cycles(const Graph& g) {
    std::vector<std::vector<int>> out;
    int n = g.n();
    if (n < 3) return out;
    std::vector<int> rest;
    for (int v = 1; v < n; ++v) rest.push_back(v);
    std::vector<int> order(static_cast<size_t>(n), 0);
    do {
        std::copy(rest.begin(), rest.end(), order.begin() + 1);
        bool ok = g.has_edge(order[static_cast<size_t>(n) - 1], 0);
        for (int i = 0; ok && i + 1 < n; ++i) ok = g.has_edge(order[i], order[i + 1]);
        if (ok) out.push_back(order);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

// exhaustive backtracking from vertex 0
inline bool ham_cycle_exists(const Graph& g) {
    int n = g.n();
    if (n < 3) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < 2) return false;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> path{0};
    seen[0] = 1;
    std::function<bool()> go = [&]() {
        int u = path.back();
        if (static_cast<int>(path.size()) == n) return g.has_edge(u, 0);
        for (int w : g.neighbours(u)) {
            if (seen[w]) continue;
            seen[w] = 1;
            path.push_back(w);
            if (go()) return true;
            path.pop_back();
            seen[w] = 0;
        }
        return false;
    };
    return go();
}

// exhaustive rainbow Hamilton cycle search: depth-first from vertex 0,
// pruning any branch that repeats a colour. Returns a witness order.
inline std::optional<std::vector<int>> rainbow_hc(const Graph& g, const Colouring& c) {
    int n = g.n();
    if (n < 3) return std::nullopt;
    int max_colour = -1;
    for (const Edge& e : g.edges()) max_colour = std::max(max_colour, c.colour(e));
    std::vector<char> used(static_cast<size_t>(max_colour) + 1, 0);
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> path{0};
    seen[0] = 1;
    std::function<bool()> go = [&]() {
        int u = path.back();
        if (static_cast<int>(path.size()) == n) {
            if (!g.has_edge(u, 0)) return false;
            return !used[c.colour(u, 0)];
        }
        for (int w : g.neighbours(u)) {
            if (seen[w]) continue;
            int col = c.colour(u, w);
            if (used[col]) continue;
            used[col] = 1;
            seen[w] = 1;
            path.push_back(w);
            if (go()) return true;
            path.pop_back();
            seen[w] = 0;
            used[col] = 0;
        }
        return false;
    };
    if (go()) return path;
    return std::nullopt;
}

// all k-subsets of {0..n-1} in lexicographic order
inline void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> pick(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
        fn(pick);
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) return;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace oracle
