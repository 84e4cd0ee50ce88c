#ifndef AVCERT_TESTS_ORACLES_HPP
#define AVCERT_TESTS_ORACLES_HPP

// Independent oracles used to derive expected values. These deliberately
// avoid the library's HNF/solve code paths: they work by enumeration,
// substitution tables and residue closures.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "avcert/matrix.hpp"
#include "avcert/numeric.hpp"
#include "avcert/unipoly.hpp"

namespace oracles {

using avcert::Int;
using avcert::IntMat;
using avcert::IntVec;
using avcert::Rat;
using avcert::RatVec;
using avcert::UniPoly;

// Reduce a polynomial in tau modulo a monic integer minpoly via a power
// substitution table (no long division): powers x^d, x^{d+1}, ... are
// precomputed from x^d = -(c_0 + c_1 x + ... + c_{d-1} x^{d-1}).
inline RatVec reduce_power_table(const UniPoly& minpoly, const UniPoly& value)
{
    const long d = minpoly.degree();
    std::vector<RatVec> table;  // table[k] = coords of x^k, k up to deg(value)
    for (long k = 0; k <= std::max<long>(value.degree(), d - 1); ++k) {
        if (k < d) {
            RatVec row(d, Rat(0));
            row[k] = 1;
            table.push_back(row);
        } else {
            // x^k = x * x^{k-1}: shift then substitute the top power.
            RatVec prev = table[k - 1];
            RatVec row(d, Rat(0));
            Rat top = prev[d - 1];
            for (long j = d - 1; j > 0; --j) row[j] = prev[j - 1];
            for (long j = 0; j < d; ++j) row[j] -= top * minpoly.coeff(j);
            table.push_back(row);
        }
    }
    RatVec out(d, Rat(0));
    for (long k = 0; k <= value.degree(); ++k)
        for (long j = 0; j < d; ++j) out[j] += value.coeff(k) * table[k][j];
    return out;
}

// Does v belong to the Z-span of gens? Sound whenever modulus * Z^n is
// contained in the span; membership is decided in the finite quotient
// (Z/modulus)^n by a closure walk over the generators.
inline bool lattice_member_residue(const IntVec& v, const std::vector<IntVec>& gens,
                                   const Int& modulus)
{
    const std::size_t n = v.size();
    auto reduce = [&](const IntVec& x) {
        IntVec r(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = avcert::mod_floor(x[i], modulus);
        return r;
    };
    std::set<IntVec> span;
    std::vector<IntVec> frontier;
    IntVec zero(n, Int(0));
    span.insert(zero);
    frontier.push_back(zero);
    while (!frontier.empty()) {
        IntVec cur = frontier.back();
        frontier.pop_back();
        for (const auto& g : gens) {
            IntVec nxt(n);
            for (std::size_t i = 0; i < n; ++i) nxt[i] = cur[i] + g[i];
            nxt = reduce(nxt);
            if (span.insert(nxt).second) frontier.push_back(nxt);
        }
    }
    return span.count(reduce(v)) > 0;
}

// Exhaustive point count of y^2 = x^3 + a x + b over F_p.
inline long curve_points_by_enumeration(long p, long a, long b)
{
    long count = 1;  // infinity
    for (long x = 0; x < p; ++x) {
        long fx = ((x * x % p) * x % p + a % p * x % p + b % p) % p;
        fx = ((fx % p) + p) % p;
        for (long y = 0; y < p; ++y)
            if (y * y % p == fx) ++count;
    }
    return count;
}

// Random small integer matrix and random unimodular matrix (a product of
// elementary operations), both from a caller-provided engine for determinism.
inline IntMat random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                long lo = -9, long hi = 9)
{
    std::uniform_int_distribution<long> d(lo, hi);
    IntMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = d(rng);
    return m;
}

inline IntMat random_unimodular(std::mt19937_64& rng, std::size_t n, int ops = 12)
{
    std::uniform_int_distribution<long> coef(-3, 3);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> kind(0, 2);
    IntMat u = IntMat::identity(n);
    for (int t = 0; t < ops; ++t) {
        std::size_t i = idx(rng), j = idx(rng);
        switch (kind(rng)) {
            case 0:
                if (i != j) u.add_multiple_of_row(i, j, Int(coef(rng)));
                break;
            case 1: u.swap_rows(i, j); break;
            default: u.negate_row(i); break;
        }
    }
    return u;
}

}  // namespace oracles

#endif
