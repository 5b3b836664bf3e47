#include "cubecensus/edgecolor.hpp"

#include <algorithm>

namespace cubecensus {

namespace {

// Shared backtracking core over the line structure: edges carry available
// color masks; assigning an edge strips its color from the neighbors.
struct ColorSearch {
    std::vector<std::pair<int, int>> edges;
    std::vector<uint64_t> adj;   // adj[e] = edges sharing an endpoint with e
    std::vector<uint32_t> avail; // per-edge color mask
    std::vector<int> color;
    int ncolors;
    bool count_mode = false;
    BigInt count;
    bool found = false;

    ColorSearch(const Graph& g, int ncolors_) : ncolors(ncolors_) {
        edges = g.edges();
        size_t m = edges.size();
        adj.assign(m, 0);
        for (size_t a = 0; a < m; ++a)
            for (size_t b = a + 1; b < m; ++b) {
                auto [u1, v1] = edges[a];
                auto [u2, v2] = edges[b];
                if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) {
                    adj[a] |= uint64_t(1) << b;
                    adj[b] |= uint64_t(1) << a;
                }
            }
        avail.assign(m, (1u << ncolors) - 1);
        color.assign(m, -1);
    }

    // most constrained uncolored edge, smallest index on ties
    int pick() const {
        int best = -1, best_c = ncolors + 1;
        for (size_t e = 0; e < edges.size(); ++e) {
            if (color[e] >= 0) continue;
            int c = __builtin_popcount(avail[e]);
            if (c < best_c) {
                best_c = c;
                best = static_cast<int>(e);
                if (c <= 1) break;
            }
        }
        return best;
    }

    bool assign(int e, int c, std::vector<int>& touched) {
        color[e] = c;
        uint64_t nbrs = adj[e];
        while (nbrs) {
            int b = __builtin_ctzll(nbrs);
            nbrs &= nbrs - 1;
            if (color[b] >= 0) continue;
            if (avail[b] & (1u << c)) {
                avail[b] &= ~(1u << c);
                touched.push_back(b);
                if (avail[b] == 0) return false;
            }
        }
        return true;
    }

    void undo(int e, int c, const std::vector<int>& touched) {
        color[e] = -1;
        for (int b : touched) avail[b] |= 1u << c;
    }

    void search(size_t colored) {
        if (found) return;
        if (colored == edges.size()) {
            if (count_mode)
                count += BigInt(1);
            else
                found = true;
            return;
        }
        int e = pick();
        uint32_t options = avail[e];
        while (options) {
            int c = __builtin_ctz(options);
            options &= options - 1;
            std::vector<int> touched;
            if (assign(e, c, touched)) search(colored + 1);
            if (found) return; // keep the witness assignment intact
            undo(e, c, touched);
        }
    }
};

} // namespace

ChromaticIndexResult chromatic_index(const Graph& g) {
    int k = g.degree(0);
    if (k < 1 || !g.is_regular(k))
        throw EdgecolorError(EdgecolorError::Kind::NotRegular,
                             "chromatic_index requires a k-regular graph, k >= 1");

    ColorSearch s(g, k);
    // color symmetry: the k edges at vertex 0 take colors 0..k-1
    std::vector<int> dummy;
    int c = 0;
    for (size_t e = 0; e < s.edges.size(); ++e) {
        if (s.edges[e].first != 0) continue;
        if (!(s.avail[e] & (1u << c)) || !s.assign(static_cast<int>(e), c, dummy))
            return {k + 1, std::nullopt}; // forced clash already
        ++c;
    }
    s.search(static_cast<size_t>(k));
    if (!s.found) return {k + 1, std::nullopt};
    EdgeColoring w;
    for (size_t e = 0; e < s.edges.size(); ++e) w.assignment.push_back({s.edges[e], s.color[e]});
    return {k, std::move(w)};
}

BigInt count_3_edge_colorings(const Graph& g) {
    if (!g.is_regular(3))
        throw EdgecolorError(EdgecolorError::Kind::NotCubic, "counting requires a cubic graph");
    if (g.edge_count() > 36)
        throw EdgecolorError(EdgecolorError::Kind::TooLarge, "more than 36 edges");
    ColorSearch s(g, 3);
    s.count_mode = true;
    s.search(0);
    return s.count;
}

HamiltonianResult is_hamiltonian(const Graph& g) {
    int n = g.order();
    if (n < 3) throw EdgecolorError(EdgecolorError::Kind::TooSmall, "need at least 3 vertices");
    if (!g.is_connected())
        throw EdgecolorError(EdgecolorError::Kind::Disconnected, "graph is not connected");

    std::vector<int> path{0};
    uint32_t visited = 1u;

    // prune: an unvisited vertex needs two usable endpoints among the
    // unvisited set, the current path end, and the start
    auto viable = [&](int endpoint) {
        uint32_t free = ~visited & (n == 32 ? ~0u : (1u << n) - 1);
        uint32_t r = free;
        while (r) {
            int v = __builtin_ctz(r);
            r &= r - 1;
            int options = __builtin_popcount(g.row(v) & free) +
                          ((g.row(v) >> endpoint) & 1u) + ((g.row(v) >> 0) & 1u);
            if (options < 2) return false;
        }
        return true;
    };

    std::vector<int> cycle;
    // depth-first in ascending neighbor order: the first closed cycle with
    // path[1] < path[n-1] is the lexicographically least representative
    auto rec = [&](auto&& self, int at) -> bool {
        if (static_cast<int>(path.size()) == n) {
            if (g.adjacent(at, 0) && path[1] < path.back()) {
                cycle = path;
                return true;
            }
            return false;
        }
        uint32_t options = g.row(at) & ~visited;
        while (options) {
            int v = __builtin_ctz(options);
            options &= options - 1;
            path.push_back(v);
            visited |= 1u << v;
            bool ok = viable(v) && self(self, v);
            if (ok) return true;
            visited &= ~(1u << v);
            path.pop_back();
        }
        return false;
    };

    if (rec(rec, 0)) return {true, std::move(cycle)};
    return {false, std::nullopt};
}

} // namespace cubecensus
