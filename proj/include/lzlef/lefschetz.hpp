#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lzlef/intmatrix.hpp"
#include "lzlef/monomial.hpp"

namespace lzlef {

/******** The weak Lefschetz property ********/

struct WlpVerdict {
    bool has_wlp = false;
    long characteristic = 0;
    // Degrees j where Z(T_j(I)) fails maximal rank; empty iff has_wlp.
    std::vector<int> critical_degrees;
    // Which rule decided: a theorem case "(a)".."(V')", "determinant" for a
    // peak determinant, "rank-scan" for the full scan.
    std::string rule;
    std::optional<BigInt> det_value;
    std::optional<std::vector<long>> obstruction_primes;
};

// Checks rank Z(T_j(I)) = min(rows, cols) for every j from 2 to
// (max socle degree)+2 over Q or F_p. Requires I Artinian.
WlpVerdict wlp_rank_scan(const MonomialIdeal& I, long characteristic);

// Peak criterion: T_d(I) balanced and no socle below d-2, so the verdict
// is det Z(T_d(I)) != 0 in the given characteristic. Throws when the
// preconditions fail (use wlp_rank_scan instead).
WlpVerdict wlp_peak(const MonomialIdeal& I, int d, long characteristic);

// Decision tree for almost complete intersections in characteristic 0;
// positive characteristic delegates to the rank scan.
WlpVerdict aci_wlp(const AciParams& p, long characteristic = 0);

// Match against the two axes-central parameter shapes, up to simultaneous
// permutation of the coordinates. A = d-a, B = d-b, C = d-c,
// M = d-(alpha+beta+gamma). Returns nothing when the main theorem's
// conditions (i)-(iv) fail or neither shape matches.
struct AxesCentralMatch {
    int form = 0;  // 1: A,B,C share parity; 2: C differs
    int A = 0, B = 0, C = 0, M = 0;
    bool all_odd = false;  // all of A, B, C, M odd
};
std::optional<AxesCentralMatch> axes_central_form(const AciParams& p);

// Inner puncture equidistant from the three opposite punctures; equivalent
// to R/I being level.
bool gravity_central(const AciParams& p);

// 3^ceil((a+b+c+4)(a+b+c+2)/16): characteristic bound above which the weak
// Lefschetz property transfers from characteristic 0.
BigInt char_bound(int a, int b, int c);

// Distinct prime factors of |n|, ascending; empty for |n| <= 1.
std::vector<long> prime_factors(const BigInt& n);

// True iff conditions (i)-(iv) of the ACI decision tree hold: the
// semistability bounds plus integrality of d.
bool aci_main_conditions(const AciParams& p);

}  // namespace lzlef
