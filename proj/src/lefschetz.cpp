#include "lzlef/lefschetz.hpp"

#include <algorithm>
#include <array>

#include "lzlef/region.hpp"
#include "lzlef/tiling.hpp"

namespace lzlef {

namespace {

void check_characteristic(long characteristic) {
    if (characteristic == 0) return;
    if (!is_prime(characteristic))
        throw std::invalid_argument("characteristic must be 0 or a prime");
}

}  // namespace

WlpVerdict wlp_rank_scan(const MonomialIdeal& I, long characteristic) {
    check_characteristic(characteristic);
    if (!I.is_artinian())
        throw std::invalid_argument("wlp_rank_scan: ideal is not Artinian");
    WlpVerdict v;
    v.characteristic = characteristic;
    v.rule = "rank-scan";
    const std::vector<int> socle = socle_degrees(I);
    const int top = socle.empty() ? 0 : socle.back();
    for (int j = 2; j <= top + 2; ++j) {
        const IntegerMatrix Z = biadjacency(build_region(I, j));
        const int maximal = std::min(Z.rows(), Z.cols());
        if (rank(Z, characteristic) != maximal) v.critical_degrees.push_back(j);
    }
    v.has_wlp = v.critical_degrees.empty();
    return v;
}

WlpVerdict wlp_peak(const MonomialIdeal& I, int d, long characteristic) {
    check_characteristic(characteristic);
    if (!I.is_artinian())
        throw std::invalid_argument("wlp_peak: ideal is not Artinian");
    const TriangularRegion T = build_region(I, d);
    if (!T.is_balanced())
        throw std::invalid_argument("wlp_peak: T_d(I) is unbalanced; use wlp_rank_scan");
    const std::vector<int> socle = socle_degrees(I);
    if (!socle.empty() && socle.front() < d - 2)
        throw std::invalid_argument(
            "wlp_peak: socle element below degree d-2; use wlp_rank_scan");
    WlpVerdict v;
    v.characteristic = characteristic;
    v.rule = "determinant";
    const BigInt det = determinant(biadjacency(T));
    v.det_value = det;
    if (characteristic == 0) {
        v.has_wlp = det != 0;
        if (det != 0) v.obstruction_primes = prime_factors(det);
    } else {
        v.has_wlp = mpz_fdiv_ui(det.get_mpz_t(), (unsigned long)characteristic) != 0;
    }
    if (!v.has_wlp) v.critical_degrees.push_back(d);
    return v;
}

bool aci_main_conditions(const AciParams& p) {
    p.validate();
    const long S = p.sum();
    const long g = long(p.alpha) + p.beta + p.gamma;
    const long mx = std::max({long(p.a), long(p.b), long(p.c), g});
    const long mixed =
        std::min({p.alpha + p.beta + long(p.c), p.alpha + long(p.b) + p.gamma,
                  long(p.a) + p.beta + p.gamma});
    const long pairs = std::min({long(p.a) + p.b, long(p.a) + p.c, long(p.b) + p.c});
    return 3 * mx <= S && 3 * mixed >= S && 3 * pairs >= S && S % 3 == 0;
}

std::optional<AxesCentralMatch> axes_central_form(const AciParams& p) {
    if (!aci_main_conditions(p)) return std::nullopt;
    const int d = p.peak_degree();
    const std::array<std::pair<int, int>, 3> slots{{{d - p.a, p.alpha},
                                                    {d - p.b, p.beta},
                                                    {d - p.c, p.gamma}}};
    const int M = d - (p.alpha + p.beta + p.gamma);
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& perm : perms) {
        const auto [A1, g1] = slots[perm[0]];
        const auto [A2, g2] = slots[perm[1]];
        const auto [A3, g3] = slots[perm[2]];
        AxesCentralMatch m;
        m.A = slots[0].first;
        m.B = slots[1].first;
        m.C = slots[2].first;
        m.M = M;
        m.all_odd = (m.A % 2) && (m.B % 2) && (m.C % 2) && (m.M % 2);
        if (A1 % 2 == A2 % 2 && A2 % 2 == A3 % 2) {
            if (2 * g1 == A2 + A3 && 2 * g2 == A1 + A3 && 2 * g3 == A1 + A2) {
                m.form = 1;
                return m;
            }
        }
        if (A1 % 2 == A2 % 2 && A1 % 2 != A3 % 2) {
            if (2 * g1 == A2 + A3 + 1 && 2 * g2 == A1 + A3 - 1 && 2 * g3 == A1 + A2) {
                m.form = 2;
                return m;
            }
        }
    }
    return std::nullopt;
}

bool gravity_central(const AciParams& p) {
    p.validate();
    // distances computed with 3d = sum to stay integral
    const long S = p.sum();
    const long e1 = 2 * S - 3L * (p.b + p.c + p.alpha);
    const long e2 = 2 * S - 3L * (p.a + p.c + p.beta);
    const long e3 = 2 * S - 3L * (p.a + p.b + p.gamma);
    return e1 == e2 && e2 == e3;
}

WlpVerdict aci_wlp(const AciParams& p, long characteristic) {
    p.validate();
    if (characteristic != 0) return wlp_rank_scan(aci_ideal(p), characteristic);

    WlpVerdict v;
    v.characteristic = 0;
    if (!aci_main_conditions(p)) {
        v.has_wlp = true;
        v.rule = "(a)";
        return v;
    }
    const int d = p.peak_degree();
    const long S = p.sum();

    const long mixed =
        std::min({p.alpha + p.beta + long(p.c), p.alpha + long(p.b) + p.gamma,
                  long(p.a) + p.beta + p.gamma});
    if (3 * mixed == S) {
        v.has_wlp = true;
        v.rule = "(I)";
        return v;
    }
    // (II): the inner puncture has even side length.
    if ((d - (p.alpha + p.beta + p.gamma)) % 2 == 0) {
        v.has_wlp = true;
        v.rule = "(II)";
        return v;
    }
    // (III): some corner puncture has side length zero.
    if (d == p.a || d == p.b || d == p.c) {
        v.has_wlp = true;
        v.rule = "(III)";
        return v;
    }
    if (auto ac = axes_central_form(p)) {
        v.has_wlp = !ac->all_odd;
        v.rule = ac->all_odd ? "(IV')" : "(IV)";
        if (!v.has_wlp) v.critical_degrees.push_back(d);
        return v;
    }
    // (V)/(V'): a mirror symmetry swapping two variables.
    const std::array<std::array<int, 4>, 3> mirrors{{
        {p.a == p.b && p.alpha == p.beta, p.c, p.gamma, 0},
        {p.a == p.c && p.alpha == p.gamma, p.b, p.beta, 0},
        {p.b == p.c && p.beta == p.gamma, p.a, p.alpha, 0},
    }};
    for (const auto& mir : mirrors) {
        if (!mir[0]) continue;
        const bool both_odd = (mir[1] % 2) && (mir[2] % 2);
        v.has_wlp = !both_odd;
        v.rule = both_odd ? "(V')" : "(V)";
        if (!v.has_wlp) v.critical_degrees.push_back(d);
        return v;
    }
    WlpVerdict peak = wlp_peak(aci_ideal(p), d, 0);
    peak.rule = "determinant";
    return peak;
}

BigInt char_bound(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1)
        throw std::invalid_argument("char_bound: exponents must be >= 1");
    // exponent (1/2) * binom((a+b+c)/2 + 2, 2) evaluated over Q and rounded
    // up before exponentiation
    const long n2 = long(a) + b + c + 4;  // 2x where x = (a+b+c)/2 + 2
    const long num = n2 * (n2 - 2);       // 16 * exponent
    const long e = (num + 15) / 16;
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 3, (unsigned long)e);
    return out;
}

std::vector<long> prime_factors(const BigInt& n) {
    BigInt m = abs(n);
    std::vector<long> out;
    if (m <= 1) return out;
    for (long q = 2; BigInt(q) * q <= m; q == 2 ? q = 3 : q += 2) {
        if (mpz_fdiv_ui(m.get_mpz_t(), (unsigned long)q) == 0) {
            out.push_back(q);
            while (mpz_fdiv_ui(m.get_mpz_t(), (unsigned long)q) == 0) m /= q;
        }
        if (q > 2000000) break;
    }
    if (m > 1) {
        if (mpz_probab_prime_p(m.get_mpz_t(), 40) == 0)
            throw std::domain_error("prime_factors: composite cofactor too large to factor");
        if (!m.fits_slong_p())
            throw std::domain_error("prime_factors: prime factor exceeds long");
        out.push_back(m.get_si());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace lzlef
