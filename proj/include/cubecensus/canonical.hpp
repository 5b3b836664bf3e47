#ifndef CUBECENSUS_CANONICAL_HPP
#define CUBECENSUS_CANONICAL_HPP

#include <array>

#include "cubecensus/graph.hpp"

namespace cubecensus {

// Canonical representative plus the relabeling that produces it.
// perm[v] is the canonical label of input vertex v, so
// g.relabeled(perm) == graph. Two inputs yield the same `graph`
// exactly when they are isomorphic.
struct CanonicalForm {
    Graph graph;
    std::array<int, Graph::kMaxOrder> perm;
};

CanonicalForm canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

} // namespace cubecensus

#endif
