#ifndef CUBECENSUS_GRAPH_HPP
#define CUBECENSUS_GRAPH_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cubecensus {

// Undirected simple graph on at most 32 vertices. Adjacency is one 32-bit
// row per vertex; rows stay symmetric and loop-free. Operations never mutate
// an existing graph, they build new ones.
class Graph {
public:
    static constexpr int kMaxOrder = 32;

    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int edge_count() const;
    uint32_t row(int v) const { return rows_[v]; }
    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1u; }
    int degree(int v) const { return __builtin_popcount(rows_[v]); }

    Graph with_edge(int u, int v) const;
    std::vector<std::pair<int, int>> edges() const; // (u,v) with u < v, lexicographic

    bool is_connected() const;
    bool is_regular(int k) const;
    int max_degree() const;

    // Relabel: vertex v becomes perm[v].
    Graph relabeled(const std::array<int, kMaxOrder>& perm) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        if (a.n_ != b.n_) return false;
        for (int i = 0; i < a.n_; ++i)
            if (a.rows_[i] != b.rows_[i]) return false;
        return true;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    int n_ = 0;
    std::array<uint32_t, kMaxOrder> rows_{};

    friend class GraphBuilder;
};

// Mutable scratch for construction code; finalize with build().
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool adjacent(int u, int v) const { return (g_.rows_[u] >> v) & 1u; }
    Graph build() const { return g_; }

private:
    Graph g_;
};

struct GraphError : std::runtime_error {
    enum class Kind {
        OrderOutOfRange,
        BadEdge,
        NotCubic,
        TooManyEdges,
        NoEdges,
    };
    Kind kind;
    GraphError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

struct Graph6Error : std::runtime_error {
    enum class Kind {
        InvalidChar,
        TruncatedPayload,
        OrderTooLarge,
        NonzeroPadding,
    };
    Kind kind;
    Graph6Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// graph6 interchange, one graph per string. Input tolerates the
// ">>graph6<<" header; output never emits it.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Standard graphs in a fixed labeling.
Graph petersen();
Graph complete_graph(int n);
Graph k33();

// One vertex per edge of g; vertices adjacent iff the edges share an endpoint.
Graph line_graph(const Graph& g);

// Replace each selected vertex of a cubic graph by a triangle. The three
// former edges at a replaced vertex go one to each triangle corner, in
// ascending neighbor order.
Graph triangle_replace(const Graph& g, uint32_t vertex_set);

} // namespace cubecensus

#endif
