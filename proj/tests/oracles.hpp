// Independent test oracles: small, slow, and written against the
// definitions rather than the library's algorithms.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "lzlef/intmatrix.hpp"
#include "lzlef/monomial.hpp"

namespace oracles {

// Hilbert function by inclusion-exclusion over subsets of the generators.
inline long hilbert_incl_excl(const lzlef::MonomialIdeal& I, long j) {
    if (j < 0) return 0;
    const auto& g = I.generators();
    const int m = int(g.size());
    auto count_deg = [](long t) { return t < 0 ? 0L : (t + 1) * (t + 2) / 2; };
    long total = count_deg(j);
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        lzlef::Monomial l{0, 0, 0};
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) l = lzlef::lcm(l, g[i]);
        const long c = count_deg(j - l.degree());
        total += (__builtin_popcount(mask) % 2 ? -c : c);
    }
    return total;
}

// Determinant by permutation expansion; n <= 8.
inline mpz_class det_expansion(const lzlef::IntegerMatrix& M) {
    const int n = M.rows();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    mpz_class total = 0;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        mpz_class term = (inversions % 2) ? -1 : 1;
        for (int i = 0; i < n && term != 0; ++i) term *= M.at(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Permanent by permutation expansion; n <= 8.
inline mpz_class per_expansion(const lzlef::IntegerMatrix& M) {
    const int n = M.rows();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    mpz_class total = 0;
    do {
        mpz_class term = 1;
        for (int i = 0; i < n && term != 0; ++i) term *= M.at(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Rank over Q by plain rational Gaussian elimination.
inline int rank_rational(const lzlef::IntegerMatrix& M) {
    const int m = M.rows(), n = M.cols();
    std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = mpq_class(M.at(i, j));
    int rank = 0, row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int pi = -1;
        for (int i = row; i < m; ++i)
            if (a[i][col] != 0) {
                pi = i;
                break;
            }
        if (pi < 0) continue;
        std::swap(a[pi], a[row]);
        for (int i = row + 1; i < m; ++i) {
            if (a[i][col] == 0) continue;
            const mpq_class f = a[i][col] / a[row][col];
            for (int j = col; j < n; ++j) a[i][j] -= f * a[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Random Artinian monomial ideals for property sweeps.
inline lzlef::MonomialIdeal random_artinian_ideal(std::mt19937& rng, int max_exp,
                                                  int extra_gens) {
    std::uniform_int_distribution<int> pure(1, max_exp);
    std::uniform_int_distribution<int> exp(0, max_exp - 1);
    std::vector<lzlef::Monomial> gens{{pure(rng), 0, 0}, {0, pure(rng), 0}, {0, 0, pure(rng)}};
    for (int i = 0; i < extra_gens; ++i) {
        lzlef::Monomial m{exp(rng), exp(rng), exp(rng)};
        if (m.degree() == 0) continue;
        gens.push_back(m);
    }
    return lzlef::MonomialIdeal(gens);
}

}  // namespace oracles
