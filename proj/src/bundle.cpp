#include "lzlef/bundle.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "lzlef/lefschetz.hpp"
#include "lzlef/region.hpp"
#include "lzlef/tiling.hpp"

namespace lzlef {

namespace {

long long llgcd(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b); }

long fdiv(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
long cdiv(long a, long b) { return -fdiv(-a, b); }

}  // namespace

Rat Rat::of(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("Rat: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    const long long g = std::max(1LL, llgcd(n, d));
    return Rat{n / g, d / g};
}

bool operator<(const Rat& a, const Rat& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
}

SplittingType make_splitting_type(long p, long q, long r) {
    std::array<long, 3> v{p, q, r};
    std::sort(v.begin(), v.end());
    return SplittingType{int(v[0]), int(v[1]), int(v[2])};
}

StabilityReport semistability(const MonomialIdeal& I, std::optional<int> d) {
    if (!I.is_artinian())
        throw std::invalid_argument("semistability: ideal is not Artinian");
    const std::vector<Monomial>& g = I.generators();
    const int m = int(g.size());
    if (m < 3) throw std::invalid_argument("semistability: need at least 3 generators");
    const int dd = d.value_or(I.max_generator_degree());
    if (I.max_generator_degree() > dd)
        throw std::invalid_argument("semistability: generator of degree above d");

    long sum_all = 0;
    for (const Monomial& gi : g) sum_all += gi.degree();
    const Rat rhs = Rat::of(-sum_all, m - 1);
    const long oI = over_puncturing(I, dd);

    StabilityReport rep;
    rep.slope = rhs;
    std::optional<std::vector<int>> first_violation, first_tight;

    std::vector<int> idx;
    for (int size = 2; size < m; ++size) {
        idx.resize(size);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            Monomial gJ = g[idx[0]];
            long sum_J = 0;
            for (int i : idx) {
                gJ = gcd(gJ, g[i]);
                sum_J += g[i].degree();
            }
            const int dJ = gJ.degree();
            const Rat lhs = Rat::of(dJ - sum_J, size - 1);

            // cross-check against the over-puncturing form of the inequality
            std::vector<Monomial> quot;
            for (int i : idx) quot.push_back(quotient(g[i], gJ));
            const long oJ = over_puncturing(MonomialIdeal(quot), dd - dJ);
            const Rat lhs2 = Rat::of(oJ, size - 1);
            const Rat rhs2 = Rat::of(oI, m - 1);
            const bool deg_le = lhs <= rhs, o_le = lhs2 <= rhs2;
            const bool deg_eq = lhs == rhs, o_eq = lhs2 == rhs2;
            if (deg_le != o_le || deg_eq != o_eq)
                throw std::logic_error("semistability: degree and puncture forms disagree");

            if (!deg_le && !first_violation) first_violation = idx;
            if (deg_eq && !first_tight) first_tight = idx;

            // next combination
            int i = size - 1;
            while (i >= 0 && idx[i] == m - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
        // witnesses are reported from the smallest subset size that decides
        if (first_violation) break;
    }

    rep.semistable = !first_violation.has_value();
    rep.stable = rep.semistable && !first_tight.has_value();
    const auto& w = first_violation ? first_violation : first_tight;
    if (w) {
        std::vector<Monomial> ms;
        for (int i : *w) ms.push_back(g[i]);
        rep.witness = std::move(ms);
    }
    return rep;
}

AciSemistability aci_semistable(const AciParams& p) {
    p.validate();
    const long S = p.sum();
    AciSemistability out;
    out.cond_max =
        3 * std::max({long(p.a), long(p.b), long(p.c), long(p.alpha) + p.beta + p.gamma}) <= S;
    out.cond_mixed =
        3 * std::min({p.alpha + p.beta + long(p.c), p.alpha + long(p.b) + p.gamma,
                      long(p.a) + p.beta + p.gamma}) >= S;
    out.cond_pairs =
        3 * std::min({long(p.a) + p.b, long(p.a) + p.c, long(p.b) + p.c}) >= S;
    out.semistable = out.cond_max && out.cond_mixed && out.cond_pairs;
    return out;
}

TwoOfThree two_of_three(const MonomialIdeal& I, int d) {
    const TriangularRegion T = build_region(I, d);
    if (T.empty()) throw std::invalid_argument("two_of_three: region is empty");
    TwoOfThree out;
    out.perfectly_punctured = over_puncturing(I, d) == 0;
    out.tileable = is_tileable_matching(T);
    out.semistable = semistability(I, d).semistable;
    const int trues =
        int(out.perfectly_punctured) + int(out.tileable) + int(out.semistable);
    out.consistent = trues != 2;
    return out;
}

bool stability_region(const MonomialIdeal& I, int d) {
    const TriangularRegion T = build_region(I, d);
    if (T.empty()) throw std::invalid_argument("stability_region: region is empty");
    if (!is_tileable_matching(T))
        throw std::invalid_argument("stability_region: region is not tileable");
    if (over_puncturing_region(T) != 0)
        throw std::invalid_argument("stability_region: region is not perfectly-punctured");
    const MonomialIdeal JT = region_ideal(T);
    for (const Monomial& gj : JT.generators())
        if (gj.degree() <= d - 1 && !I.contains(gj))
            throw std::invalid_argument("stability_region: I != I + J(T)");
    for (int e = 1; e < d; ++e)
        for (const Monomial& m : monomials_of_degree(e)) {
            if (I.contains(m)) continue;
            if (over_puncturing_region(monomial_subregion(T, m)) >= 0) return false;
        }
    return true;
}

int regularity_2var(int a, int b, int alpha, int beta, int gamma) {
    if (alpha < 1 || alpha >= a)
        throw std::invalid_argument("regularity_2var: need 0 < alpha < a");
    if (beta < 1 || beta >= b)
        throw std::invalid_argument("regularity_2var: need 0 < beta < b");
    if (gamma < 1) throw std::invalid_argument("regularity_2var: need gamma >= 1");
    if (alpha + beta + gamma > a + b - 2)
        throw std::invalid_argument(
            "regularity_2var: third generator lies in (x^a, y^b); set not minimal");
    const long inner = std::min({long(a) + b, long(a) + beta + gamma, long(b) + alpha + gamma,
                                 cdiv(long(a) + b + alpha + beta + gamma, 2)});
    return int(-1 + std::max({long(a) + beta, long(b) + alpha, inner}));
}

std::vector<long> hilbert_2var(const std::vector<TwoVarGenerator>& gens, int tmax,
                               long characteristic) {
    if (characteristic != 0 && !is_prime(characteristic))
        throw std::invalid_argument("hilbert_2var: characteristic must be 0 or a prime");
    std::vector<long> dims;
    dims.reserve(tmax + 1);
    for (int t = 0; t <= tmax; ++t) {
        // columns indexed by the y-exponent i of x^(t-i) y^i; pure monomial
        // generators contribute unit rows, killing whole column intervals
        std::vector<bool> killed(t + 1, false);
        for (const TwoVarGenerator& gn : gens) {
            if (gn.se != 0 || gn.degree() > t) continue;
            for (int i = gn.ye; i <= t - gn.xe; ++i) killed[i] = true;
        }
        std::vector<int> col_of(t + 1, -1);
        int ncols = 0;
        for (int i = 0; i <= t; ++i)
            if (!killed[i]) col_of[i] = ncols++;
        if (ncols == 0) {
            dims.push_back(0);
            continue;
        }
        std::vector<std::vector<BigInt>> rows;
        for (const TwoVarGenerator& gn : gens) {
            if (gn.se == 0 || gn.degree() > t) continue;
            for (int s = 0; s + gn.degree() <= t; ++s) {
                std::vector<BigInt> row(ncols, 0);
                bool nonzero = false;
                for (int k = 0; k <= gn.se; ++k) {
                    const int i = gn.ye + k + s;
                    if (col_of[i] < 0) continue;
                    BigInt bin;
                    mpz_bin_uiui(bin.get_mpz_t(), gn.se, k);
                    row[col_of[i]] = bin;
                    nonzero = true;
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
        if (rows.empty()) {
            dims.push_back(ncols);
            continue;
        }
        IntegerMatrix M(int(rows.size()), ncols);
        for (int i = 0; i < int(rows.size()); ++i)
            for (int j = 0; j < ncols; ++j) M.at(i, j) = rows[i][j];
        dims.push_back(ncols - rank(M, characteristic));
    }
    return dims;
}

std::vector<long> hilbert_oracle(const AciParams& p, long characteristic) {
    p.validate();
    return hilbert_2var({{p.a, 0, 0}, {0, p.b, 0}, {0, 0, p.c}, {p.alpha, p.beta, p.gamma}},
                        p.a + p.b, characteristic);
}

namespace {

// Hilbert function of the syzygy module from the four-generator
// presentation of J.
struct SyzygyData {
    std::array<long, 4> degs;
    std::vector<long> dimSJ;  // dim [S/J]_t up to a+b

    long dim_J(long t) const {
        if (t < 0) return 0;
        const long total = t + 1;
        const long sj = t < long(dimSJ.size()) ? dimSJ[t] : 0;
        return total - sj;
    }
    long free_part(long t) const {
        long f = 0;
        for (long dg : degs) f += std::max(0L, t - dg + 1);
        return f;
    }
    long syz_dim(long t) const { return free_part(t) - dim_J(t); }
};

}  // namespace

SplittingType splitting_type_oracle(const AciParams& p, long characteristic) {
    const long S = p.sum();
    SyzygyData data{{long(p.a), long(p.b), long(p.c), long(p.alpha) + p.beta + p.gamma},
                    hilbert_oracle(p, characteristic)};

    const long tcap = S + 2;
    const auto first_positive = [&](const auto& h) {
        for (long t = 0; t <= tcap; ++t)
            if (h(t) > 0) return t;
        return -1L;
    };
    const long tr = first_positive([&](long t) { return data.syz_dim(t); });
    if (tr < 0) throw std::logic_error("splitting_type_oracle: no syzygies found");
    const long r = -tr;
    const long tq = first_positive(
        [&](long t) { return data.syz_dim(t) - std::max(0L, t + r + 1); });
    if (tq < 0) throw std::logic_error("splitting_type_oracle: rank < 2 syzygy module");
    const long q = -tq;
    const long pp = -S - q - r;
    if (pp > q || q > r)
        throw std::logic_error("splitting_type_oracle: unordered splitting type");
    for (long t = 0; t <= tcap; ++t) {
        const long predicted = std::max(0L, t + pp + 1) + std::max(0L, t + q + 1) +
                               std::max(0L, t + r + 1);
        if (predicted != data.syz_dim(t))
            throw std::logic_error("splitting_type_oracle: Hilbert data does not match a "
                                   "free module of rank 3");
    }
    return make_splitting_type(pp, q, r);
}

SplittingFormulaResult splitting_type_formula(const AciParams& p) {
    p.validate();
    const long S = p.sum();
    if (aci_semistable(p).semistable) {
        const long k = fdiv(S, 3);
        switch (S % 3) {
            case 1:
                return {make_splitting_type(-k - 1, -k, -k), "semistable (3k+1)"};
            case 2:
                return {make_splitting_type(-k - 1, -k - 1, -k), "semistable (3k+2)"};
            default:
                break;
        }
        if (aci_wlp(p, 0).has_wlp)
            return {make_splitting_type(-k, -k, -k), "semistable (3k, WLP)"};
        return {make_splitting_type(-k - 1, -k, -k + 1), "semistable (3k, no WLP)"};
    }

    // sort the generator pairs so that a <= b <= c
    std::array<std::pair<long, long>, 3> v{{{p.a, p.alpha}, {p.b, p.beta}, {p.c, p.gamma}}};
    std::stable_sort(v.begin(), v.end(),
                     [](const auto& l, const auto& r) { return l.first < r.first; });
    const long a = v[0].first, b = v[1].first, c = v[2].first;
    const long al = v[0].second, be = v[1].second, ga = v[2].second;
    const long G = al + be + ga;

    if (std::min(G, c) >= a + b - 1)
        return {make_splitting_type(-c, -G, -a - b), "nonsemistable (i)"};

    // degrees of the lcm of the inner generator with each pure power
    const long ma = a + be + ga, mb = b + al + ga, mc = c + al + be;
    if (a + b + c <= std::min({2 * ma, 2 * mb, 2 * mc, a + b + G}))
        return {make_splitting_type(-G, -cdiv(a + b + c, 2), -fdiv(a + b + c, 2)),
                "nonsemistable (ii)"};
    if (a + b + G <= std::min({2 * ma, 2 * mb, 2 * mc, a + b + c})) {
        const long qv = -std::min({ma, mb, cdiv(a + b + G, 2)});
        const long rv = -(a + b + G) - qv;
        return {make_splitting_type(-c, qv, rv), "nonsemistable (iii)"};
    }
    const long s = -std::min({ma, mb, mc});
    if (2 * (-s) < std::min(a + b + G, a + b + c)) {
        // The line subbundle of slope s is the syzygy of the inner
        // generator with one pure power; the rank-2 quotient may itself be
        // unstable, destabilized by the syzygy of a triple through that
        // pair. Its largest line-bundle degree caps the split.
        long pure, rest1, rest2;
        if (-s == ma) {
            pure = a; rest1 = b; rest2 = c;
        } else if (-s == mb) {
            pure = b; rest1 = a; rest2 = c;
        } else {
            pure = c; rest1 = a; rest2 = b;
        }
        const long u_star = -(pure + G + std::min(rest1, rest2)) - s;
        const long C = -S - s;
        const long hi = std::max(u_star, cdiv(C, 2));
        const char* tag =
            2 * u_star > C ? "nonsemistable (iv, unstable quotient)" : "nonsemistable (iv)";
        return {make_splitting_type(C - hi, hi, s), tag};
    }
    throw std::logic_error("splitting_type_formula: case dispatch fell through");
}

EquivalenceReport equivalence_check(const AciParams& p, long characteristic) {
    if (characteristic != 0 && !is_prime(characteristic))
        throw std::invalid_argument("equivalence_check: characteristic must be 0 or a prime");
    if (!aci_main_conditions(p))
        throw std::invalid_argument("equivalence_check: conditions (i)-(iv) do not hold");
    EquivalenceReport rep;
    rep.d = p.peak_degree();
    const MonomialIdeal I = aci_ideal(p);
    rep.det = determinant(biadjacency(build_region(I, rep.d)));
    rep.det_nonzero =
        characteristic == 0
            ? rep.det != 0
            : mpz_fdiv_ui(rep.det.get_mpz_t(), (unsigned long)characteristic) != 0;
    rep.wlp = wlp_rank_scan(I, characteristic).has_wlp;
    rep.oracle_type = splitting_type_oracle(p, characteristic);
    rep.type_is_peak = rep.oracle_type == SplittingType{-rep.d, -rep.d, -rep.d};
    rep.agree = rep.wlp == rep.det_nonzero && rep.det_nonzero == rep.type_is_peak;
    return rep;
}

}  // namespace lzlef
