#include "cubecensus/canonical.hpp"

#include <vector>

namespace cubecensus {

namespace {

// Ordered partition of the vertex set as a list of cell bitmasks.
using Partition = std::vector<uint32_t>;

// Equitable refinement (1-dimensional Weisfeiler-Leman): repeatedly split a
// cell whose vertices see different neighbor counts in some cell. Cells are
// scanned left to right and sub-cells ordered by ascending count, so the
// result depends only on the partition, not on vertex labels.
void refine(const Graph& g, Partition& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t ci = 0; ci < cells.size() && !changed; ++ci) {
            if (__builtin_popcount(cells[ci]) < 2) continue;
            for (size_t sj = 0; sj < cells.size() && !changed; ++sj) {
                // bucket cell ci's vertices by neighbor count in cell sj
                std::array<uint32_t, Graph::kMaxOrder + 1> bucket{};
                uint32_t rest = cells[ci];
                int seen = 0;
                while (rest) {
                    int v = __builtin_ctz(rest);
                    rest &= rest - 1;
                    int c = __builtin_popcount(g.row(v) & cells[sj]);
                    if (!bucket[c]) ++seen;
                    bucket[c] |= 1u << v;
                }
                if (seen < 2) continue;
                Partition next;
                next.reserve(cells.size() + seen - 1);
                for (size_t t = 0; t < ci; ++t) next.push_back(cells[t]);
                for (int c = 0; c <= Graph::kMaxOrder; ++c)
                    if (bucket[c]) next.push_back(bucket[c]);
                for (size_t t = ci + 1; t < cells.size(); ++t) next.push_back(cells[t]);
                cells = std::move(next);
                changed = true;
            }
        }
    }
}

struct UnionFind {
    std::array<int, Graph::kMaxOrder> parent;
    explicit UnionFind(int n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct CanonSearch {
    const Graph& g;
    int n;
    bool have_best = false;
    std::array<uint32_t, Graph::kMaxOrder> best_rows{};
    std::array<int, Graph::kMaxOrder> best_perm{};
    std::array<int, Graph::kMaxOrder> best_inv{};
    UnionFind orbits;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()), orbits(graph.order()) {}

    void leaf(const Partition& cells) {
        std::array<int, Graph::kMaxOrder> perm{};
        for (int p = 0; p < n; ++p) perm[__builtin_ctz(cells[p])] = p;
        std::array<uint32_t, Graph::kMaxOrder> rows{};
        for (int u = 0; u < n; ++u) {
            uint32_t r = g.row(u);
            while (r) {
                int v = __builtin_ctz(r);
                r &= r - 1;
                rows[perm[u]] |= 1u << perm[v];
            }
        }
        if (!have_best) {
            have_best = true;
            best_rows = rows;
            best_perm = perm;
            for (int v = 0; v < n; ++v) best_inv[perm[v]] = v;
            return;
        }
        for (int i = 0; i < n; ++i) {
            if (rows[i] != best_rows[i]) {
                if (rows[i] > best_rows[i]) {
                    best_rows = rows;
                    best_perm = perm;
                    for (int v = 0; v < n; ++v) best_inv[perm[v]] = v;
                }
                return;
            }
        }
        // equal certificate: best_inv . perm is an automorphism
        for (int v = 0; v < n; ++v) orbits.unite(v, best_inv[perm[v]]);
    }

    void search(const Partition& cells, int depth) {
        int target = -1;
        for (size_t i = 0; i < cells.size(); ++i) {
            if (__builtin_popcount(cells[i]) >= 2) {
                target = static_cast<int>(i);
                break;
            }
        }
        if (target < 0) {
            leaf(cells);
            return;
        }
        uint32_t cell = cells[target];
        std::vector<int> tried;
        uint32_t rest = cell;
        while (rest) {
            int v = __builtin_ctz(rest);
            rest &= rest - 1;
            if (depth == 0) {
                bool skip = false;
                for (int u : tried)
                    if (orbits.find(u) == orbits.find(v)) {
                        skip = true;
                        break;
                    }
                if (skip) continue;
                tried.push_back(v);
            }
            Partition next;
            next.reserve(cells.size() + 1);
            for (int i = 0; i < target; ++i) next.push_back(cells[i]);
            next.push_back(1u << v);
            next.push_back(cell & ~(1u << v));
            for (size_t i = target + 1; i < cells.size(); ++i) next.push_back(cells[i]);
            refine(g, next);
            search(next, depth + 1);
        }
    }
};

} // namespace

CanonicalForm canonical_form(const Graph& g) {
    int n = g.order();
    uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
    Partition cells{all};
    refine(g, cells);
    CanonSearch s(g);
    s.search(cells, 0);
    CanonicalForm out{g.relabeled(s.best_perm), s.best_perm};
    return out;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a).graph == canonical_form(b).graph;
}

} // namespace cubecensus
