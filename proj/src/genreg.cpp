#include "cubecensus/genreg.hpp"

#include <algorithm>
#include <fstream>
#include <functional>

#include "cubecensus/canonical.hpp"
#include "cubecensus/parallel.hpp"

namespace cubecensus {

namespace {

void validate(const GenSpec& s) {
    if (s.n < 1 || s.n > Graph::kMaxOrder || s.k < 0 || s.k >= s.n || (s.n * s.k) % 2 != 0)
        throw GenregError(GenregError::Kind::InfeasibleSpec,
                          "infeasible spec: n=" + std::to_string(s.n) + " k=" + std::to_string(s.k));
}

struct UnionFind32 {
    std::array<int, Graph::kMaxOrder> parent;
    void reset(int n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// ------------------------------------------------------- vertex orderly --
//
// Canonical labeling = the one whose column-major upper-triangle bit string
// is lexicographically maximal. Column j depends only on the induced prefix
// {0..j}, so prefixes of a canonical labeling are canonical and a partial
// graph can be cut as soon as it fails the test.

struct VOState {
    int placed = 0;
    std::array<uint32_t, Graph::kMaxOrder> rows{};
    std::array<int, Graph::kMaxOrder> deg{};
};

// Exact test: no relabeling of the m placed vertices yields a larger string.
class VOCanonTest {
public:
    VOCanonTest(const std::array<uint32_t, Graph::kMaxOrder>& rows, int m) : rows_(rows), m_(m) {
        orbits_.reset(m);
    }

    bool canonical() {
        rec(0);
        return !noncanonical_;
    }

private:
    const std::array<uint32_t, Graph::kMaxOrder>& rows_;
    int m_;
    std::array<int, Graph::kMaxOrder> tau_{};
    uint32_t used_ = 0;
    bool noncanonical_ = false;
    UnionFind32 orbits_;

    void rec(int l) {
        if (noncanonical_) return;
        if (l == m_) {
            // relabeled string equals the original: tau^-1 is an automorphism
            for (int p = 0; p < m_; ++p) orbits_.unite(tau_[p], p);
            return;
        }
        uint32_t target = rows_[l] & ((1u << l) - 1); // column l of the original
        int tried[Graph::kMaxOrder];
        int ntried = 0;
        for (int v = 0; v < m_; ++v) {
            if ((used_ >> v) & 1u) continue;
            bool skip = false;
            for (int t = 0; t < ntried && !skip; ++t) {
                skip = rows_[tried[t]] == rows_[v] ||
                       (l == 0 && orbits_.find(tried[t]) == orbits_.find(v));
            }
            if (skip) continue;
            tried[ntried++] = v;
            uint32_t col = 0;
            for (int t = 0; t < l; ++t) col |= ((rows_[tau_[t]] >> v) & 1u) << t;
            if (col != target) {
                uint32_t c = __builtin_ctz(col ^ target);
                if ((col >> c) & 1u) {
                    noncanonical_ = true; // found a larger labeling
                    return;
                }
                continue; // this branch is smaller for good
            }
            tau_[l] = v;
            used_ |= 1u << v;
            rec(l + 1);
            used_ &= ~(1u << v);
            if (noncanonical_) return;
        }
    }
};

class VertexOrderly {
public:
    VertexOrderly(const GenSpec& spec) : n_(spec.n), k_(spec.k), connected_only_(spec.connected_only) {}

    // Full run from an initial state; leaves go to `sink`.
    template <typename Sink>
    void run(const VOState& from, Sink&& sink, int stop_depth = -1) {
        st_ = from;
        stop_depth_ = stop_depth;
        sink_ = [&](const VOState& s, bool leaf) { sink(s, leaf); };
        rec();
    }

    static VOState initial() {
        VOState s;
        s.placed = 1;
        return s;
    }

private:
    int n_, k_;
    bool connected_only_;
    int stop_depth_ = -1;
    VOState st_;
    std::function<void(const VOState&, bool)> sink_;

    void rec() {
        if (st_.placed == n_) {
            Graph g = to_graph();
            if (!connected_only_ || g.is_connected()) sink_(st_, true);
            return;
        }
        if (st_.placed == stop_depth_) {
            sink_(st_, false);
            return;
        }
        int j = st_.placed;
        int deficient[Graph::kMaxOrder];
        int nd = 0;
        for (int v = 0; v < j; ++v)
            if (st_.deg[v] < k_) deficient[nd++] = v;
        uint32_t chosen = 0;
        enumerate_sets(deficient, nd, 0, chosen, 0);
    }

    // all subsets of the deficient vertices of size <= k, in a fixed order
    void enumerate_sets(const int* def, int nd, int idx, uint32_t& chosen, int sz) {
        try_place(chosen, sz);
        if (sz == k_ || idx == nd) return;
        for (int i = idx; i < nd; ++i) {
            chosen |= 1u << def[i];
            enumerate_sets(def, nd, i + 1, chosen, sz + 1);
            chosen &= ~(1u << def[i]);
        }
    }

    void try_place(uint32_t nbrs, int sz) {
        int j = st_.placed;
        int future = n_ - 1 - j;
        if (k_ - sz > future) return;

        st_.rows[j] = nbrs;
        st_.deg[j] = sz;
        uint32_t rest = nbrs;
        while (rest) {
            int v = __builtin_ctz(rest);
            rest &= rest - 1;
            st_.rows[v] |= 1u << j;
            ++st_.deg[v];
        }
        ++st_.placed;

        if (feasible() && VOCanonTest(st_.rows, st_.placed).canonical()) rec();

        --st_.placed;
        rest = nbrs;
        while (rest) {
            int v = __builtin_ctz(rest);
            rest &= rest - 1;
            st_.rows[v] &= ~(1u << j);
            --st_.deg[v];
        }
        st_.rows[j] = 0;
        st_.deg[j] = 0;
    }

    bool feasible() const {
        int future = n_ - st_.placed;
        int sum_r = 0;
        for (int v = 0; v < st_.placed; ++v) {
            int r = k_ - st_.deg[v];
            if (r > future) return false;
            sum_r += r;
        }
        int capacity = k_ * future;
        if (sum_r > capacity) return false;
        if ((capacity - sum_r) % 2 != 0) return false;
        return true;
    }

    Graph to_graph() const {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if ((st_.rows[u] >> v) & 1u) es.emplace_back(u, v);
        return Graph::from_edges(n_, es);
    }
};

// --------------------------------------------------------- edge orderly --
//
// Independent strategy: add one edge at a time at the smallest vertex of
// deficient degree, neighbors in increasing order, so every labeled graph
// has a unique build path (its edges in lexicographic order). Canonical
// labeling = lexicographically maximal row-major upper-triangle string;
// removing the last edge of a canonical graph keeps it canonical, which
// justifies pruning on the test.

class EOCanonTest {
public:
    EOCanonTest(const std::array<uint32_t, Graph::kMaxOrder>& rows,
                const std::array<int, Graph::kMaxOrder>& deg, int n, int k)
        : rows_(rows), deg_(deg), n_(n), k_(k) {
        orbits_.reset(n);
    }

    bool canonical() {
        rec(0);
        return !noncanonical_;
    }

private:
    const std::array<uint32_t, Graph::kMaxOrder>& rows_;
    const std::array<int, Graph::kMaxOrder>& deg_;
    int n_, k_;
    std::array<int, Graph::kMaxOrder> tau_{};
    uint32_t used_ = 0;
    bool noncanonical_ = false;
    UnionFind32 orbits_;

    static uint32_t packed_ones(int from, int count, int n) {
        if (count <= 0) return 0;
        int hi = std::min(n, from + count);
        if (from >= hi) return 0;
        uint32_t upto_hi = hi == 32 ? ~0u : (1u << hi) - 1;
        return upto_hi & ~((1u << from) - 1);
    }

    // Compare an optimistic completion of the current prefix against the
    // original string. Rows already fixed keep their determined bits and
    // pack their remaining degree right after the prefix; unfixed rows are
    // bounded by a full run of min(k, space) ones. The bound dominates
    // every completion, so LESS prunes soundly.
    enum class Bound { Less, NotLess };
    Bound bound(int placed) const {
        int max_rem = 0;
        for (int u = 0; u < n_; ++u) {
            if ((used_ >> u) & 1u) continue;
            int rem = deg_[u] - __builtin_popcount(rows_[u] & used_);
            if (rem > max_rem) max_rem = rem;
        }
        for (int r = 0; r < n_; ++r) {
            uint32_t target = rows_[r] & ~((1u << r) - 1u) & ~(1u << r); // bits > r
            uint32_t opt;
            if (r < placed) {
                opt = 0;
                for (int c = r + 1; c < placed; ++c)
                    opt |= ((rows_[tau_[r]] >> tau_[c]) & 1u) << c;
                int rem = deg_[tau_[r]] - __builtin_popcount(rows_[tau_[r]] & used_);
                opt |= packed_ones(placed, rem, n_);
            } else {
                opt = packed_ones(r + 1, std::min(max_rem, n_ - 1 - r), n_);
            }
            if (opt != target) {
                uint32_t c = __builtin_ctz(opt ^ target);
                return ((opt >> c) & 1u) ? Bound::NotLess : Bound::Less;
            }
        }
        return Bound::NotLess;
    }

    void rec(int l) {
        if (noncanonical_) return;
        if (l == n_) {
            // everything determined: exact comparison
            std::array<uint32_t, Graph::kMaxOrder> rel{};
            std::array<int, Graph::kMaxOrder> inv{};
            for (int p = 0; p < n_; ++p) inv[tau_[p]] = p;
            for (int u = 0; u < n_; ++u) {
                uint32_t r = rows_[u];
                while (r) {
                    int v = __builtin_ctz(r);
                    r &= r - 1;
                    rel[inv[u]] |= 1u << inv[v];
                }
            }
            for (int r = 0; r < n_; ++r) {
                uint32_t a = rel[r] & ~((1u << r) - 1u) & ~(1u << r);
                uint32_t b = rows_[r] & ~((1u << r) - 1u) & ~(1u << r);
                if (a != b) {
                    uint32_t c = __builtin_ctz(a ^ b);
                    if ((a >> c) & 1u) noncanonical_ = true;
                    return;
                }
            }
            for (int p = 0; p < n_; ++p) orbits_.unite(tau_[p], p);
            return;
        }
        int tried[Graph::kMaxOrder];
        int ntried = 0;
        for (int v = 0; v < n_; ++v) {
            if ((used_ >> v) & 1u) continue;
            bool skip = false;
            for (int t = 0; t < ntried && !skip; ++t) {
                // twins give equal subtrees; known orbits prune the root
                skip = rows_[tried[t]] == rows_[v] ||
                       (l == 0 && orbits_.find(tried[t]) == orbits_.find(v));
            }
            if (skip) continue;
            tried[ntried++] = v;
            tau_[l] = v;
            used_ |= 1u << v;
            if (bound(l + 1) == Bound::NotLess) rec(l + 1);
            used_ &= ~(1u << v);
            if (noncanonical_) return;
        }
    }
};

class EdgeOrderly {
public:
    EdgeOrderly(const GenSpec& spec) : n_(spec.n), k_(spec.k), connected_only_(spec.connected_only) {}

    std::vector<Graph> run() {
        rec();
        return std::move(out_);
    }

private:
    int n_, k_;
    bool connected_only_;
    std::array<uint32_t, Graph::kMaxOrder> rows_{};
    std::array<int, Graph::kMaxOrder> deg_{};
    std::vector<Graph> out_;

    void rec() {
        int v = -1;
        for (int u = 0; u < n_; ++u)
            if (deg_[u] < k_) {
                v = u;
                break;
            }
        if (v < 0) {
            emit();
            return;
        }
        int wstart = v + 1;
        uint32_t above = rows_[v] >> (v + 1);
        if (above) wstart = v + 1 + (31 - __builtin_clz(above)) + 1;
        for (int w = wstart; w < n_; ++w) {
            if (deg_[w] >= k_ || ((rows_[v] >> w) & 1u)) continue;
            rows_[v] |= 1u << w;
            rows_[w] |= 1u << v;
            ++deg_[v];
            ++deg_[w];
            if (feasible(v, w) && EOCanonTest(rows_, deg_, n_, k_).canonical()) rec();
            rows_[v] &= ~(1u << w);
            rows_[w] &= ~(1u << v);
            --deg_[v];
            --deg_[w];
        }
    }

    bool feasible(int v, int w) const {
        uint32_t def_mask = 0;
        for (int u = 0; u < n_; ++u)
            if (deg_[u] < k_) def_mask |= 1u << u;
        // v's further neighbors must come after w
        int rv = k_ - deg_[v];
        if (rv > 0) {
            uint32_t candidates = def_mask & ~rows_[v] & ~((w == 31) ? ~0u : ((1u << (w + 1)) - 1));
            if (__builtin_popcount(candidates) < rv) return false;
        }
        // every deficient vertex needs enough non-adjacent deficient partners
        uint32_t rest = def_mask;
        while (rest) {
            int u = __builtin_ctz(rest);
            rest &= rest - 1;
            int ru = k_ - deg_[u];
            uint32_t partners = def_mask & ~rows_[u] & ~(1u << u);
            if (__builtin_popcount(partners) < ru) return false;
        }
        return true;
    }

    void emit() {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n_; ++u)
            for (int x = u + 1; x < n_; ++x)
                if ((rows_[u] >> x) & 1u) es.emplace_back(u, x);
        Graph g = Graph::from_edges(n_, es);
        if (!connected_only_ || g.is_connected()) out_.push_back(g);
    }
};

std::vector<Graph> finalize(std::vector<Graph> raw, int jobs) {
    std::vector<Graph> canon;
    canon.reserve(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) canon.push_back(raw[i]); // placeholder slots
    parallel_for(raw.size(), jobs, [&](size_t i) { canon[i] = canonical_form(raw[i]).graph; });
    std::vector<std::string> keys(canon.size());
    for (size_t i = 0; i < canon.size(); ++i) keys[i] = to_graph6(canon[i]);
    std::vector<size_t> order(canon.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return keys[a] < keys[b]; });
    std::vector<Graph> out;
    out.reserve(canon.size());
    for (size_t idx : order) out.push_back(canon[idx]);
    for (size_t i = 1; i < order.size(); ++i)
        if (keys[order[i - 1]] == keys[order[i]])
            throw std::logic_error("generator emitted isomorphic duplicates");
    return out;
}

} // namespace

std::vector<Graph> generate(const GenSpec& spec, int jobs) {
    validate(spec);
    VertexOrderly gen(spec);

    int frontier_depth = (jobs > 1 && spec.n > 8) ? std::min(spec.n - 1, 8) : -1;
    std::vector<VOState> frontier;
    std::vector<Graph> raw;
    gen.run(
        VertexOrderly::initial(),
        [&](const VOState& s, bool leaf) {
            if (leaf) {
                std::vector<std::pair<int, int>> es;
                for (int u = 0; u < spec.n; ++u)
                    for (int v = u + 1; v < spec.n; ++v)
                        if ((s.rows[u] >> v) & 1u) es.emplace_back(u, v);
                raw.push_back(Graph::from_edges(spec.n, es));
            } else {
                frontier.push_back(s);
            }
        },
        frontier_depth);

    if (!frontier.empty()) {
        std::vector<std::vector<Graph>> slots(frontier.size());
        parallel_for(frontier.size(), jobs, [&](size_t i) {
            VertexOrderly worker(spec);
            worker.run(frontier[i], [&](const VOState& s, bool leaf) {
                if (!leaf) return;
                std::vector<std::pair<int, int>> es;
                for (int u = 0; u < spec.n; ++u)
                    for (int v = u + 1; v < spec.n; ++v)
                        if ((s.rows[u] >> v) & 1u) es.emplace_back(u, v);
                slots[i].push_back(Graph::from_edges(spec.n, es));
            });
        });
        for (auto& part : slots)
            for (auto& g : part) raw.push_back(std::move(g));
    }
    return finalize(std::move(raw), jobs);
}

long long count(const GenSpec& spec, int jobs) {
    return static_cast<long long>(generate(spec, jobs).size());
}

std::vector<Graph> generate_edge_orderly(const GenSpec& spec) {
    validate(spec);
    EdgeOrderly gen(spec);
    return finalize(gen.run(), 1);
}

void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs) {
    std::ofstream out(path);
    if (!out)
        throw GenregError(GenregError::Kind::FileError, "cannot open for writing: " + path);
    for (const auto& g : graphs) out << to_graph6(g) << '\n';
    if (!out)
        throw GenregError(GenregError::Kind::FileError, "write failed: " + path);
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw GenregError(GenregError::Kind::FileError, "cannot open for reading: " + path);
    std::vector<Graph> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const Graph6Error& e) {
            throw GenregError(GenregError::Kind::ParseError,
                              path + ":" + std::to_string(lineno) + ": " + e.what(), lineno);
        }
    }
    return out;
}

} // namespace cubecensus
