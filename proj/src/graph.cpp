#include "cubecensus/graph.hpp"

#include <algorithm>

namespace cubecensus {

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxOrder)
        throw GraphError(GraphError::Kind::OrderOutOfRange,
                         "graph order must be in 1..32, got " + std::to_string(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

int Graph::edge_count() const {
    int twice = 0;
    for (int i = 0; i < n_; ++i) twice += degree(i);
    return twice / 2;
}

Graph Graph::with_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        throw GraphError(GraphError::Kind::BadEdge,
                         "bad edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    Graph out = *this;
    out.rows_[u] |= 1u << v;
    out.rows_[v] |= 1u << u;
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

bool Graph::is_connected() const {
    uint32_t seen = 1u, frontier = 1u;
    while (frontier) {
        uint32_t next = 0;
        for (int v = 0; v < n_; ++v)
            if ((frontier >> v) & 1u) next |= rows_[v];
        frontier = next & ~seen;
        seen |= next;
    }
    uint32_t all = n_ == 32 ? ~0u : (1u << n_) - 1;
    return (seen & all) == all;
}

bool Graph::is_regular(int k) const {
    for (int v = 0; v < n_; ++v)
        if (degree(v) != k) return false;
    return true;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

Graph Graph::relabeled(const std::array<int, kMaxOrder>& perm) const {
    Graph out(n_);
    for (int u = 0; u < n_; ++u) {
        uint32_t r = rows_[u];
        while (r) {
            int v = __builtin_ctz(r);
            r &= r - 1;
            out.rows_[perm[u]] |= 1u << perm[v];
        }
    }
    return out;
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

void GraphBuilder::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_ || u == v)
        throw GraphError(GraphError::Kind::BadEdge,
                         "bad edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    g_.rows_[u] |= 1u << v;
    g_.rows_[v] |= 1u << u;
}

void GraphBuilder::remove_edge(int u, int v) {
    g_.rows_[u] &= ~(1u << v);
    g_.rows_[v] &= ~(1u << u);
}

// ---------------------------------------------------------------- graph6 --

Graph parse_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

    if (text.empty())
        throw Graph6Error(Graph6Error::Kind::TruncatedPayload, "empty graph6 string");
    unsigned char first = static_cast<unsigned char>(text[0]);
    if (first < 63 || first > 126)
        throw Graph6Error(Graph6Error::Kind::InvalidChar,
                          "order byte " + std::to_string(first) + " outside 63..126");
    if (first == 126)
        throw Graph6Error(Graph6Error::Kind::OrderTooLarge, "multi-byte order (n >= 63) unsupported");
    int n = first - 63;
    if (n < 1 || n > Graph::kMaxOrder)
        throw Graph6Error(Graph6Error::Kind::OrderTooLarge,
                          "order " + std::to_string(n) + " outside supported range 1..32");

    int nbits = n * (n - 1) / 2;
    int nbytes = (nbits + 5) / 6;
    if (static_cast<int>(text.size()) - 1 < nbytes)
        throw Graph6Error(Graph6Error::Kind::TruncatedPayload,
                          "payload has " + std::to_string(text.size() - 1) + " bytes, need " +
                              std::to_string(nbytes));
    if (static_cast<int>(text.size()) - 1 > nbytes)
        throw Graph6Error(Graph6Error::Kind::InvalidChar, "trailing data after payload");

    GraphBuilder b(n);
    int bit = 0;
    for (int byte = 0; byte < nbytes; ++byte) {
        unsigned char c = static_cast<unsigned char>(text[1 + byte]);
        if (c < 63 || c > 126)
            throw Graph6Error(Graph6Error::Kind::InvalidChar,
                              "payload byte " + std::to_string(c) + " outside 63..126");
        unsigned val = c - 63;
        for (int k = 5; k >= 0; --k, ++bit) {
            bool set = (val >> k) & 1u;
            if (bit >= nbits) {
                if (set)
                    throw Graph6Error(Graph6Error::Kind::NonzeroPadding, "nonzero padding bit");
                continue;
            }
            if (set) {
                // column-major upper triangle: (0,1),(0,2),(1,2),(0,3),...
                int idx = bit, j = 1;
                while (idx >= j) idx -= j, ++j;
                b.add_edge(idx, j);
            }
        }
    }
    return b.build();
}

std::string to_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int nbits = n * (n - 1) / 2;
    unsigned acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (nbits % 6 != 0) {
        acc <<= 6 - nbits % 6;
        out.push_back(static_cast<char>(63 + acc));
    }
    return out;
}

// ----------------------------------------------------------- named graphs --

Graph petersen() {
    GraphBuilder b(10);
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);         // outer cycle
        b.add_edge(i, i + 5);               // spokes
        b.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
    }
    return b.build();
}

Graph complete_graph(int n) {
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
    return b.build();
}

Graph k33() {
    GraphBuilder b(6);
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) b.add_edge(i, j);
    return b.build();
}

// -------------------------------------------------------- constructions --

Graph line_graph(const Graph& g) {
    auto es = g.edges();
    if (es.empty())
        throw GraphError(GraphError::Kind::NoEdges, "line graph of an edgeless graph");
    if (es.size() > static_cast<size_t>(Graph::kMaxOrder))
        throw GraphError(GraphError::Kind::TooManyEdges,
                         "line graph would have " + std::to_string(es.size()) + " > 32 vertices");
    GraphBuilder b(static_cast<int>(es.size()));
    for (size_t a = 0; a < es.size(); ++a)
        for (size_t c = a + 1; c < es.size(); ++c) {
            auto [u1, v1] = es[a];
            auto [u2, v2] = es[c];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) b.add_edge((int)a, (int)c);
        }
    return b.build();
}

Graph triangle_replace(const Graph& g, uint32_t vertex_set) {
    int n = g.order();
    if (!g.is_regular(3))
        throw GraphError(GraphError::Kind::NotCubic, "triangle replacement requires a cubic graph");
    uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
    if (vertex_set & ~all)
        throw GraphError(GraphError::Kind::BadEdge, "selected vertex outside the graph");

    int s = __builtin_popcount(vertex_set);
    int nn = n + 2 * s;
    if (nn > Graph::kMaxOrder)
        throw GraphError(GraphError::Kind::OrderOutOfRange,
                         "replacement would exceed 32 vertices");

    // corner(v, w): the triangle vertex of replaced v that takes over the
    // former edge toward neighbor w. Corners are (v, n+2t, n+2t+1) and
    // neighbors are assigned in ascending order.
    std::array<int, Graph::kMaxOrder> tri_index{};
    {
        int t = 0;
        for (int v = 0; v < n; ++v)
            if ((vertex_set >> v) & 1u) tri_index[v] = t++;
    }
    auto corner = [&](int v, int w) {
        int rank = __builtin_popcount(g.row(v) & ((1u << w) - 1));
        return rank == 0 ? v : n + 2 * tri_index[v] + (rank - 1);
    };

    GraphBuilder b(nn);
    for (auto [u, v] : g.edges()) {
        int a = (vertex_set >> u) & 1u ? corner(u, v) : u;
        int c = (vertex_set >> v) & 1u ? corner(v, u) : v;
        b.add_edge(a, c);
    }
    for (int v = 0; v < n; ++v) {
        if (!((vertex_set >> v) & 1u)) continue;
        int t = tri_index[v];
        b.add_edge(v, n + 2 * t);
        b.add_edge(v, n + 2 * t + 1);
        b.add_edge(n + 2 * t, n + 2 * t + 1);
    }
    return b.build();
}

} // namespace cubecensus
