#include "cubecensus/similarity.hpp"

#include <algorithm>

#include "cubecensus/charpoly.hpp"

namespace cubecensus {

namespace {

struct Rat {
    BigInt num, den; // den > 0, reduced

    explicit Rat(BigInt n = BigInt(0), BigInt d = BigInt(1)) : num(std::move(n)), den(std::move(d)) {
        reduce();
    }
    void reduce() {
        if (den.is_negative()) {
            num = -num;
            den = -den;
        }
        BigInt g = BigInt::gcd(num, den);
        if (!g.is_zero() && g != BigInt(1)) {
            num /= g;
            den /= g;
        }
        if (num.is_zero()) den = BigInt(1);
    }
};

Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
Rat mul(const Rat& a, const BigInt& s) { return Rat(a.num * s, a.den); }
Rat div(const Rat& a, const BigInt& s) { return Rat(a.num, a.den * s); }

} // namespace

PrimitiveIntVector kernel_vector(const Graph& g, long long lambda) {
    const int n = g.order();
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = BigInt((g.adjacent(i, j) ? 1 : 0) - (i == j ? lambda : 0));

    // fraction-free (Bareiss) row echelon, columns left to right
    std::vector<std::pair<int, int>> pivots; // (row, col)
    int free_col = -1;
    int r = 0;
    BigInt prev(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = r; i < n; ++i)
            if (!m[i][c].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) {
            if (free_col < 0) free_col = c;
            else
                throw SimilarityError(SimilarityError::Kind::NotSimple,
                                      "eigenvalue " + std::to_string(lambda) +
                                          " has multiplicity > 1");
            continue;
        }
        std::swap(m[p], m[r]);
        for (int i = r + 1; i < n; ++i) {
            for (int j = c + 1; j < n; ++j) {
                BigInt q, rem;
                BigInt::divmod(m[i][j] * m[r][c] - m[i][c] * m[r][j], prev, q, rem);
                if (!rem.is_zero()) throw std::logic_error("kernel_vector: inexact Bareiss step");
                m[i][j] = std::move(q);
            }
            m[i][c] = BigInt(0);
        }
        prev = m[r][c];
        pivots.push_back({r, c});
        ++r;
    }
    if (free_col < 0)
        throw SimilarityError(SimilarityError::Kind::NotAnEigenvalue,
                              std::to_string(lambda) + " is not an eigenvalue");

    // back-substitute over exact rationals with the free variable at 1
    std::vector<Rat> x(n);
    x[free_col] = Rat(BigInt(1));
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        auto [pr, pc] = *it;
        Rat sum;
        for (int j = pc + 1; j < n; ++j)
            if (!m[pr][j].is_zero()) sum = sum + mul(x[j], m[pr][j]);
        x[pc] = div(Rat(-sum.num, sum.den), m[pr][pc]);
    }

    // clear denominators, divide by gcd, normalize leading sign
    BigInt lcm(1);
    for (const auto& xi : x) lcm = lcm / BigInt::gcd(lcm, xi.den) * xi.den;
    std::vector<BigInt> v(n);
    for (int i = 0; i < n; ++i) v[i] = x[i].num * (lcm / x[i].den);
    BigInt g_all(0);
    for (const auto& vi : v) g_all = BigInt::gcd(g_all, vi);
    if (g_all.is_zero()) throw std::logic_error("kernel_vector: zero vector");
    for (auto& vi : v) vi /= g_all;
    for (const auto& vi : v) {
        if (vi.is_zero()) continue;
        if (vi.is_negative())
            for (auto& w : v) w = -w;
        break;
    }

    // exact verification: A v = lambda v
    for (int i = 0; i < n; ++i) {
        BigInt acc;
        uint32_t row = g.row(i);
        while (row) {
            int t = __builtin_ctz(row);
            row &= row - 1;
            acc += v[t];
        }
        if (acc != BigInt(lambda) * v[i]) throw std::logic_error("kernel_vector: verification failed");
    }

    PrimitiveIntVector out;
    out.entries = std::move(v);
    for (const auto& vi : out.entries) out.normsq += vi * vi;
    return out;
}

bool norm_ratio_rational(const PrimitiveIntVector& a, const PrimitiveIntVector& b) {
    return (a.normsq * b.normsq).is_perfect_square();
}

SimilarityVerdict rational_similarity_obstruction(const Graph& g, const Graph& h) {
    CharPoly pg = char_poly(g);
    if (pg != char_poly(h))
        throw SimilarityError(SimilarityError::Kind::NotCospectral,
                              "graphs are not cospectral");

    std::vector<long long> simple;
    for (const auto& root : integral_roots(pg))
        if (root.multiplicity == 1) simple.push_back(root.value);
    // several eigenvalues can carry the obstruction; report the smallest in
    // magnitude so verdicts are stable and 0 wins when it qualifies
    std::sort(simple.begin(), simple.end(), [](long long a, long long b) {
        return std::llabs(a) != std::llabs(b) ? std::llabs(a) < std::llabs(b) : a < b;
    });

    if (simple.empty()) {
        SimilarityVerdict v{SimilarityVerdict::Kind::Inconclusive,
                            SimilarityVerdict::Reason::NoCommonSimpleIntegralEigenvalue};
        return v;
    }
    for (long long lambda : simple) {
        PrimitiveIntVector xi = kernel_vector(g, lambda);
        PrimitiveIntVector eta = kernel_vector(h, lambda);
        if (!norm_ratio_rational(xi, eta)) {
            SimilarityVerdict v{SimilarityVerdict::Kind::NoRationalSimilarity,
                                SimilarityVerdict::Reason::None, lambda};
            // ratio of the norms squared, reduced and normalized to >= 1 so
            // the verdict does not depend on argument order
            BigInt num = eta.normsq, den = xi.normsq;
            BigInt gg = BigInt::gcd(num, den);
            num /= gg;
            den /= gg;
            if (num < den) std::swap(num, den);
            v.ratio_sq_num = num;
            v.ratio_sq_den = den;
            return v;
        }
    }
    return SimilarityVerdict{SimilarityVerdict::Kind::Inconclusive,
                             SimilarityVerdict::Reason::AllRatiosRational};
}

// ------------------------------------------------------------ switching --

namespace {

void check_partition_shape(const Graph& g, const GmPartition& p) {
    uint32_t all = g.order() == 32 ? ~0u : (1u << g.order()) - 1;
    uint32_t seen = p.rest;
    if (p.rest & ~all)
        throw SimilarityError(SimilarityError::Kind::InvalidPartition, "remainder outside graph");
    for (uint32_t cell : p.cells) {
        if (cell == 0 || (cell & ~all) || (cell & seen))
            throw SimilarityError(SimilarityError::Kind::InvalidPartition,
                                  "cells must be nonempty, disjoint, inside the graph");
        seen |= cell;
    }
    if (seen != all)
        throw SimilarityError(SimilarityError::Kind::InvalidPartition,
                              "partition must cover the vertex set");
}

} // namespace

bool gm_validate(const Graph& g, const GmPartition& p) {
    check_partition_shape(g, p);
    // vertices of a cell see every cell equitably
    for (uint32_t ci : p.cells) {
        for (uint32_t cj : p.cells) {
            int expected = -1;
            uint32_t rest = ci;
            while (rest) {
                int v = __builtin_ctz(rest);
                rest &= rest - 1;
                int cnt = __builtin_popcount(g.row(v) & cj);
                if (expected < 0) expected = cnt;
                else if (cnt != expected)
                    return false;
            }
        }
    }
    // remainder vertices see 0, half, or all of each cell
    uint32_t rest = p.rest;
    while (rest) {
        int v = __builtin_ctz(rest);
        rest &= rest - 1;
        for (uint32_t ci : p.cells) {
            int size = __builtin_popcount(ci);
            int cnt = __builtin_popcount(g.row(v) & ci);
            if (cnt != 0 && cnt != size && 2 * cnt != size) return false;
        }
    }
    return true;
}

Graph gm_switch(const Graph& g, const GmPartition& p) {
    if (!gm_validate(g, p))
        throw SimilarityError(SimilarityError::Kind::InvalidPartition,
                              "partition fails the switching conditions");
    int n = g.order();
    GraphBuilder b(n);
    for (auto [u, v] : g.edges()) b.add_edge(u, v);

    uint32_t rest = p.rest;
    while (rest) {
        int v = __builtin_ctz(rest);
        rest &= rest - 1;
        for (uint32_t ci : p.cells) {
            int size = __builtin_popcount(ci);
            int cnt = __builtin_popcount(g.row(v) & ci);
            if (cnt == 0 || 2 * cnt != size) continue;
            uint32_t cell = ci;
            while (cell) {
                int u = __builtin_ctz(cell);
                cell &= cell - 1;
                if (g.adjacent(u, v)) b.remove_edge(u, v);
                else
                    b.add_edge(u, v);
            }
        }
    }
    Graph out = b.build();
    if (char_poly(out) != char_poly(g))
        throw std::logic_error("gm_switch: output failed the cospectrality check");
    return out;
}

std::vector<GmPartition> gm_search(const Graph& g, int cell_size) {
    if (cell_size != 2 && cell_size != 4 && cell_size != 6)
        throw std::invalid_argument("gm_search: cell size must be 2, 4 or 6");
    int n = g.order();
    std::vector<GmPartition> out;
    if (cell_size > n) return out;
    uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
    // ascending bitmask order over all cell_size-subsets
    uint32_t mask = (1u << cell_size) - 1;
    while (mask <= all) {
        GmPartition p{{mask}, all & ~mask};
        if (gm_validate(g, p)) out.push_back(p);
        // next subset of the same popcount (Gosper)
        uint32_t c = mask & -mask;
        uint32_t r = mask + c;
        if (r == 0) break;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    return out;
}

} // namespace cubecensus
