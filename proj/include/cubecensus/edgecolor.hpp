#ifndef CUBECENSUS_EDGECOLOR_HPP
#define CUBECENSUS_EDGECOLOR_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cubecensus/bigint.hpp"
#include "cubecensus/graph.hpp"

namespace cubecensus {

struct EdgecolorError : std::runtime_error {
    enum class Kind {
        NotRegular,
        NotCubic,
        TooLarge,
        Disconnected,
        TooSmall,
    };
    Kind kind;
    EdgecolorError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// Proper total edge coloring: one entry per edge, edges sharing an endpoint
// get distinct colors.
struct EdgeColoring {
    std::vector<std::pair<std::pair<int, int>, int>> assignment; // ((u,v), color), u < v
};

struct ChromaticIndexResult {
    int value;                            // k (class 1) or k+1 (class 2)
    std::optional<EdgeColoring> witness;  // present exactly when value == k
};

// Vizing class of a k-regular graph: k with a witness coloring, or k+1
// after an exhaustive search proves no k-edge-coloring exists.
ChromaticIndexResult chromatic_index(const Graph& g);

// Exact number of proper edge colorings with 3 labeled colors (cubic g,
// at most 36 edges).
BigInt count_3_edge_colorings(const Graph& g);

struct HamiltonianResult {
    bool hamiltonian;
    std::optional<std::vector<int>> cycle; // starts at 0, when hamiltonian
};

HamiltonianResult is_hamiltonian(const Graph& g);

} // namespace cubecensus

#endif
