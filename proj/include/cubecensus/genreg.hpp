#ifndef CUBECENSUS_GENREG_HPP
#define CUBECENSUS_GENREG_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "cubecensus/graph.hpp"

namespace cubecensus {

struct GenSpec {
    int n = 0;
    int k = 0;
    bool connected_only = true;
};

struct GenregError : std::runtime_error {
    enum class Kind {
        InfeasibleSpec,
        FileError,
        ParseError,
    };
    Kind kind;
    int line = 0; // for ParseError
    GenregError(Kind kk, const std::string& msg, int ln = 0)
        : std::runtime_error(msg), kind(kk), line(ln) {}
};

// Exhaustive, isomorph-free generation of k-regular graphs of order n,
// connected-only by default. Exactly one representative per isomorphism
// class, emitted in canonical labeling and sorted by ascending graph6
// string; the result is identical for every job count.
//
// Orderly generation by vertex augmentation: a partial graph on the first
// j vertices survives only while it is the lexicographically extremal
// labeling of itself, which makes the search isomorph-free without any
// lookup table.
std::vector<Graph> generate(const GenSpec& spec, int jobs = 1);
long long count(const GenSpec& spec, int jobs = 1);

// Independent second strategy: orderly generation over single edge
// insertions at the smallest degree-deficient vertex, with its own
// canonicity test. Kept deliberately separate from generate() so the two
// implementations can cross-validate each other's censuses.
std::vector<Graph> generate_edge_orderly(const GenSpec& spec);

void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs);
std::vector<Graph> read_graph6_file(const std::string& path);

} // namespace cubecensus

#endif
