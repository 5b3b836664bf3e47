// Test-only brute-force oracles. Each one is deliberately naive and kept
// independent of the library code paths it cross-checks.
#ifndef CUBECENSUS_TESTS_ORACLES_HPP
#define CUBECENSUS_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "cubecensus/graph.hpp"

namespace oracles {

using cubecensus::Graph;

// Isomorphism by backtracking over all vertex mappings.
inline bool iso_backtrack(const Graph& a, const Graph& b, std::vector<int>& map, uint32_t used, int depth) {
    int n = a.order();
    if (depth == n) return true;
    for (int w = 0; w < n; ++w) {
        if ((used >> w) & 1u) continue;
        if (a.degree(depth) != b.degree(w)) continue;
        bool ok = true;
        for (int u = 0; u < depth && ok; ++u)
            ok = a.adjacent(u, depth) == b.adjacent(map[u], w);
        if (!ok) continue;
        map[depth] = w;
        if (iso_backtrack(a, b, map, used | (1u << w), depth + 1)) return true;
    }
    return false;
}

inline bool is_isomorphic_bruteforce(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> map(a.order());
    return iso_backtrack(a, b, map, 0, 0);
}

// Every labeled k-regular graph on n vertices, by DFS over the vertex pairs
// in lexicographic order with degree-cap pruning.
template <typename Fn>
inline void labeled_regular_rec(int n, int k, int i, int j, std::vector<uint32_t>& rows,
                                std::vector<int>& deg, Fn&& visit) {
    if (i == n - 1) {
        for (int v = 0; v < n; ++v)
            if (deg[v] != k) return;
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n; ++u)
            for (int w = u + 1; w < n; ++w)
                if ((rows[u] >> w) & 1u) es.emplace_back(u, w);
        visit(Graph::from_edges(n, es));
        return;
    }
    int ni = i, nj = j + 1;
    if (nj == n) {
        ni = i + 1;
        nj = ni + 1;
    }
    // vertex i can still gain edges only to vertices > j
    if (k - deg[i] <= n - 1 - j) {
        labeled_regular_rec(n, k, ni, nj, rows, deg, visit); // skip edge (i,j)
    }
    if (deg[i] < k && deg[j] < k) {
        rows[i] |= 1u << j;
        rows[j] |= 1u << i;
        ++deg[i];
        ++deg[j];
        if (k - deg[i] <= n - 1 - j) labeled_regular_rec(n, k, ni, nj, rows, deg, visit);
        rows[i] &= ~(1u << j);
        rows[j] &= ~(1u << i);
        --deg[i];
        --deg[j];
    }
}

template <typename Fn>
inline void for_each_labeled_regular(int n, int k, Fn&& visit) {
    if (n == 1) {
        if (k == 0) visit(Graph(1));
        return;
    }
    std::vector<uint32_t> rows(n, 0);
    std::vector<int> deg(n, 0);
    labeled_regular_rec(n, k, 0, 1, rows, deg, visit);
}

inline std::vector<Graph> all_labeled_regular(int n, int k, bool connected_only) {
    std::vector<Graph> out;
    for_each_labeled_regular(n, k, [&](const Graph& g) {
        if (!connected_only || g.is_connected()) out.push_back(g);
    });
    return out;
}

// Characteristic polynomial of the adjacency matrix by the Leibniz
// expansion of det(xI - A). Coefficients returned constant term first.
// Only usable for small n (n! terms).
inline std::vector<long long> charpoly_leibniz(const Graph& g) {
    int n = g.order();
    std::vector<long long> coeffs(n + 1, 0);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int fixed = 0;
        long long prod = 1;
        int inversions = 0;
        for (int i = 0; i < n && prod; ++i) {
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
            if (perm[i] == i) {
                ++fixed;
            } else {
                prod *= g.adjacent(i, perm[i]) ? -1 : 0;
            }
        }
        if (prod) coeffs[fixed] += (inversions % 2 ? -1 : 1) * prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return coeffs;
}

// Hamiltonian cycle existence by checking every cyclic vertex order.
inline bool hamiltonian_bruteforce(const Graph& g) {
    int n = g.order();
    if (n < 3) return false;
    std::vector<int> rest(n - 1);
    std::iota(rest.begin(), rest.end(), 1);
    do {
        bool ok = g.adjacent(0, rest.front()) && g.adjacent(rest.back(), 0);
        for (size_t i = 0; i + 1 < rest.size() && ok; ++i)
            ok = g.adjacent(rest[i], rest[i + 1]);
        if (ok) return true;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return false;
}

// Number of proper edge colorings with 3 labeled colors: try all colors for
// the edges in index order, comparing only against already-colored edges.
inline long long count3_rec(const std::vector<std::pair<int, int>>& es, std::vector<int>& color,
                            size_t at) {
    if (at == es.size()) return 1;
    long long total = 0;
    for (int c = 0; c < 3; ++c) {
        bool ok = true;
        for (size_t p = 0; p < at && ok; ++p) {
            if (color[p] != c) continue;
            ok = es[p].first != es[at].first && es[p].first != es[at].second &&
                 es[p].second != es[at].first && es[p].second != es[at].second;
        }
        if (!ok) continue;
        color[at] = c;
        total += count3_rec(es, color, at + 1);
    }
    return total;
}

inline long long count_3_edge_colorings_bruteforce(const Graph& g) {
    auto es = g.edges();
    std::vector<int> color(es.size(), -1);
    return count3_rec(es, color, 0);
}

// Shortest cycle length, or 0 if acyclic (BFS from every vertex).
inline int girth(const Graph& g) {
    int n = g.order();
    int best = 0;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1), par(n, -1);
        std::vector<int> queue{s};
        dist[s] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int v = 0; v < n; ++v) {
                if (!g.adjacent(u, v)) continue;
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    par[v] = u;
                    queue.push_back(v);
                } else if (v != par[u]) {
                    int len = dist[u] + dist[v] + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

} // namespace oracles

#endif
