#ifndef CUBECENSUS_CHARPOLY_HPP
#define CUBECENSUS_CHARPOLY_HPP

#include <vector>

#include "cubecensus/bigint.hpp"
#include "cubecensus/graph.hpp"

namespace cubecensus {

// Integer polynomial, constant term first.
using Poly = std::vector<BigInt>;

Poly poly_mul(const Poly& p, const Poly& q);
Poly poly_from_ints(std::initializer_list<long long> coeffs);
int poly_cmp(const Poly& a, const Poly& b); // lexicographic on coefficients

// Exact characteristic polynomial det(xI - A) of an adjacency matrix:
// monic, degree n, integer coefficients. Equality of CharPoly values is
// exactly cospectrality.
struct CharPoly {
    Poly coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    friend bool operator==(const CharPoly& a, const CharPoly& b) {
        return poly_cmp(a.coeffs, b.coeffs) == 0;
    }
    friend bool operator!=(const CharPoly& a, const CharPoly& b) { return !(a == b); }
    friend bool operator<(const CharPoly& a, const CharPoly& b) {
        return poly_cmp(a.coeffs, b.coeffs) < 0;
    }
};

// Faddeev-LeVerrier over exact integers. The adjacency matrix is 0/1, so
// every matrix product is a plain neighbor sum and every trace division
// is exact.
CharPoly char_poly(const Graph& g);

struct IntegralRoot {
    long long value;
    int multiplicity;
    friend bool operator==(const IntegralRoot& a, const IntegralRoot& b) {
        return a.value == b.value && a.multiplicity == b.multiplicity;
    }
};

// All integer roots with exact multiplicities, ascending by value.
// Integer roots of an adjacency characteristic polynomial divide the
// constant term and are bounded by the maximum degree, so the candidate
// scan stays below the polynomial degree in magnitude.
std::vector<IntegralRoot> integral_roots(const CharPoly& p);

struct CospectralClass {
    CharPoly key;
    std::vector<Graph> members; // canonical forms, sorted by graph6 string
};

// Partition pairwise non-isomorphic graphs by exact characteristic
// polynomial. Classes come back sorted by coefficient tuple.
std::vector<CospectralClass> cospectral_classes(const std::vector<Graph>& graphs, int jobs = 1);

} // namespace cubecensus

#endif
