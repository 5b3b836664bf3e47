#include "cubecensus/charpoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cubecensus/parallel.hpp"

namespace cubecensus {

Poly poly_mul(const Poly& p, const Poly& q) {
    if (p.empty() || q.empty()) return {};
    Poly r(p.size() + q.size() - 1);
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i].is_zero()) continue;
        for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    }
    return r;
}

Poly poly_from_ints(std::initializer_list<long long> coeffs) {
    Poly p;
    p.reserve(coeffs.size());
    for (long long c : coeffs) p.emplace_back(c);
    return p;
}

int poly_cmp(const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i) {
        int c = BigInt::cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

CharPoly char_poly(const Graph& g) {
    const int n = g.order();
    Poly c(n + 1);
    c[n] = BigInt(1);

    // M_1 = I; M_k = A*M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A*M_k)/k
    std::vector<std::vector<BigInt>> cur(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i) cur[i][i] = BigInt(1);
    std::vector<std::vector<BigInt>> am(n, std::vector<BigInt>(n));

    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i) {
            uint32_t nbrs = g.row(i);
            for (int j = 0; j < n; ++j) {
                BigInt sum;
                uint32_t r = nbrs;
                while (r) {
                    int t = __builtin_ctz(r);
                    r &= r - 1;
                    sum += cur[t][j];
                }
                am[i][j] = std::move(sum);
            }
        }
        BigInt trace;
        for (int i = 0; i < n; ++i) trace += am[i][i];
        BigInt q, rem;
        BigInt::divmod(trace, BigInt(k), q, rem);
        if (!rem.is_zero()) throw std::logic_error("char_poly: non-integral trace step");
        c[n - k] = -q;
        if (k < n) {
            std::swap(cur, am);
            for (int i = 0; i < n; ++i) cur[i][i] += c[n - k];
        }
    }
    return CharPoly{std::move(c)};
}

std::vector<IntegralRoot> integral_roots(const CharPoly& p) {
    if (p.coeffs.empty() || p.coeffs.back() != BigInt(1))
        throw std::invalid_argument("integral_roots: polynomial must be monic");
    Poly work = p.coeffs;
    std::vector<IntegralRoot> out;

    // factor out x^t
    int zero_mult = 0;
    while (work.size() > 1 && work.front().is_zero()) {
        work.erase(work.begin());
        ++zero_mult;
    }
    if (zero_mult) out.push_back({0, zero_mult});

    // adjacency eigenvalues are bounded by the maximum degree < n
    int bound = p.degree();
    auto is_root = [&](long long lambda) {
        BigInt acc;
        for (size_t i = work.size(); i-- > 0;) acc = acc * BigInt(lambda) + work[i];
        return acc.is_zero();
    };
    auto deflate = [&](long long lambda) {
        // synthetic division by (x - lambda); remainder must vanish
        Poly next(work.size() - 1);
        BigInt carry = work.back();
        for (size_t i = work.size() - 1; i-- > 0;) {
            next[i] = carry;
            carry = work[i] + carry * BigInt(lambda);
        }
        if (!carry.is_zero()) throw std::logic_error("integral_roots: bad deflation");
        work = std::move(next);
    };

    for (long long lambda = -bound; lambda <= bound; ++lambda) {
        if (lambda == 0 || work.size() <= 1) continue;
        if (!(work.front() % BigInt(lambda)).is_zero()) continue;
        int mult = 0;
        while (work.size() > 1 && is_root(lambda)) {
            deflate(lambda);
            ++mult;
        }
        if (mult) out.push_back({lambda, mult});
    }
    std::sort(out.begin(), out.end(),
              [](const IntegralRoot& a, const IntegralRoot& b) { return a.value < b.value; });
    return out;
}

std::vector<CospectralClass> cospectral_classes(const std::vector<Graph>& graphs, int jobs) {
    std::vector<CharPoly> polys(graphs.size(), CharPoly{});
    parallel_for(graphs.size(), jobs, [&](size_t i) { polys[i] = char_poly(graphs[i]); });

    struct PolyLess {
        bool operator()(const Poly& a, const Poly& b) const { return poly_cmp(a, b) < 0; }
    };
    std::map<Poly, std::vector<size_t>, PolyLess> buckets;
    for (size_t i = 0; i < graphs.size(); ++i) buckets[polys[i].coeffs].push_back(i);

    std::vector<CospectralClass> out;
    out.reserve(buckets.size());
    for (auto& [coeffs, idxs] : buckets) {
        CospectralClass cls;
        cls.key = CharPoly{coeffs};
        for (size_t i : idxs) cls.members.push_back(graphs[i]);
        std::sort(cls.members.begin(), cls.members.end(),
                  [](const Graph& a, const Graph& b) { return to_graph6(a) < to_graph6(b); });
        out.push_back(std::move(cls));
    }
    return out;
}

} // namespace cubecensus
