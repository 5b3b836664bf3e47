#ifndef CUBECENSUS_SIMILARITY_HPP
#define CUBECENSUS_SIMILARITY_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "cubecensus/bigint.hpp"
#include "cubecensus/graph.hpp"

namespace cubecensus {

struct SimilarityError : std::runtime_error {
    enum class Kind {
        NotAnEigenvalue,
        NotSimple,
        NotCospectral,
        InvalidPartition,
    };
    Kind kind;
    SimilarityError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// Integer eigenvector with coprime entries and positive leading sign;
// unique for a simple eigenvalue, which makes norms comparable across
// labelings (entries are labeling-dependent, normsq is not).
struct PrimitiveIntVector {
    std::vector<BigInt> entries;
    BigInt normsq;
};

// Exact kernel of A(g) - lambda*I for a simple integral eigenvalue lambda:
// fraction-free elimination, rational back-substitution, then cleared to a
// primitive integer vector.
PrimitiveIntVector kernel_vector(const Graph& g, long long lambda);

// Is sqrt(b.normsq / a.normsq) rational? Exactly: iff the product of the
// two norms squared is a perfect square.
bool norm_ratio_rational(const PrimitiveIntVector& a, const PrimitiveIntVector& b);

// Obstruction to A(g) = Q^T A(h) Q for rational orthogonal Q. If some
// common simple integral eigenvalue has eigenvectors whose norm ratio is
// irrational, no such Q exists. Eigenvalues are tried smallest magnitude
// first (ties toward the negative), so the reported witness is stable.
// Cospectral inputs only.
struct SimilarityVerdict {
    enum class Kind { NoRationalSimilarity, Inconclusive };
    enum class Reason { None, NoCommonSimpleIntegralEigenvalue, AllRatiosRational };

    Kind kind;
    Reason reason = Reason::None;
    long long lambda = 0;                      // witness eigenvalue
    BigInt ratio_sq_num, ratio_sq_den;         // reduced, normalized >= 1

    bool obstructed() const { return kind == Kind::NoRationalSimilarity; }
};

SimilarityVerdict rational_similarity_obstruction(const Graph& g, const Graph& h);

// Godsil-McKay switching partition: cells C_1..C_t plus the remainder D.
struct GmPartition {
    std::vector<uint32_t> cells;
    uint32_t rest = 0;
};

// Both switching conditions: vertices within a cell see every cell
// equitably, and every remainder vertex sees 0, half, or all of each cell.
bool gm_validate(const Graph& g, const GmPartition& p);

// Complement the adjacency between each half-degree remainder vertex and
// its cell. The result is exactly cospectral with the input (checked).
Graph gm_switch(const Graph& g, const GmPartition& p);

// All valid single-cell partitions with the given cell size (2, 4 or 6),
// in ascending order of the cell bitmask.
std::vector<GmPartition> gm_search(const Graph& g, int cell_size);

} // namespace cubecensus

#endif
