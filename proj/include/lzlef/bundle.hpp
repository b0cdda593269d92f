#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lzlef/intmatrix.hpp"
#include "lzlef/monomial.hpp"

namespace lzlef {

/******** Syzygy bundle stability and splitting types ********/

// Small exact rational for slope comparisons.
struct Rat {
    long long num = 0;
    long long den = 1;  // > 0

    static Rat of(long long n, long long d);
    bool operator==(const Rat&) const = default;
};
bool operator<(const Rat& a, const Rat& b);
inline bool operator<=(const Rat& a, const Rat& b) { return a < b || a == b; }

struct SplittingType {
    int p = 0, q = 0, r = 0;  // nondecreasing
    bool operator==(const SplittingType&) const = default;
};
SplittingType make_splitting_type(long p, long q, long r);

struct StabilityReport {
    bool semistable = false;
    bool stable = false;
    // First violating subset (not semistable), else first tight subset
    // (semistable but not stable), else nothing.
    std::optional<std::vector<Monomial>> witness;
    Rat slope;  // mu of the syzygy bundle: -(sum of generator degrees)/(m-1)
};

// Subset slope criterion over exact rationals; subsets enumerated by size,
// then lexicographically on generator indices in descending revlex order.
// Requires I Artinian with >= 3 generators of degree <= d (d defaults to
// the maximal generator degree).
StabilityReport semistability(const MonomialIdeal& I, std::optional<int> d = std::nullopt);

// The three closed-form semistability conditions for an ACI, evaluated
// against the rational d = (a+b+c+alpha+beta+gamma)/3.
struct AciSemistability {
    bool semistable = false;
    bool cond_max = false;    // max{a, b, c, alpha+beta+gamma} <= d
    bool cond_mixed = false;  // min{alpha+beta+c, alpha+b+gamma, a+beta+gamma} >= d
    bool cond_pairs = false;  // min{a+b, a+c, b+c} >= d
};
AciSemistability aci_semistable(const AciParams& p);

// Perfect puncturing, tileability and semistability computed independently;
// any two must imply the third.
struct TwoOfThree {
    bool perfectly_punctured = false;
    bool tileable = false;
    bool semistable = false;
    bool consistent = false;
};
TwoOfThree two_of_three(const MonomialIdeal& I, int d);

// Region route to stability: every proper monomial subregion
// under-punctured. Requires T_d(I) non-empty, tileable and
// perfectly-punctured with I = I + J(T).
bool stability_region(const MonomialIdeal& I, int d);

// reg(x^a, y^b, x^alpha y^beta (x+y)^gamma) in characteristic 0; requires
// the generating set minimal.
int regularity_2var(int a, int b, int alpha, int beta, int gamma);

// Generator x^xe y^ye (x+y)^se of an ideal of S = K[x,y].
struct TwoVarGenerator {
    int xe = 0, ye = 0, se = 0;
    int degree() const { return xe + ye + se; }
};

// dim [S/ideal]_t for t = 0..tmax, by exact rank of the coefficient
// matrices over Q (characteristic 0) or F_p.
std::vector<long> hilbert_2var(const std::vector<TwoVarGenerator>& gens, int tmax,
                               long characteristic);

// dim [S/J]_t for J = (x^a, y^b, (x+y)^c, x^alpha y^beta (x+y)^gamma), the
// restriction of the ACI to the line x+y+z = 0, for t = 0..a+b.
std::vector<long> hilbert_oracle(const AciParams& p, long characteristic);

// Generic splitting type solved degreewise from the four-generator
// presentation of J and the Hilbert data above.
SplittingType splitting_type_oracle(const AciParams& p, long characteristic);

// Closed-form splitting type (characteristic 0) with the case that decided
// it: nonsemistable cases (i)-(iv) on generators sorted to a <= b <= c, or
// the semistable residue-mod-3 branches.
struct SplittingFormulaResult {
    SplittingType type;
    std::string case_tag;
};
SplittingFormulaResult splitting_type_formula(const AciParams& p);

// The three equivalent predicates of the splitting-type theorem, computed
// independently in the given characteristic. Requires the decision-tree
// conditions (i)-(iv).
struct EquivalenceReport {
    int d = 0;
    bool wlp = false;
    bool det_nonzero = false;
    bool type_is_peak = false;  // oracle splitting type = (-d,-d,-d)
    bool agree = false;
    SplittingType oracle_type;
    BigInt det;
};
EquivalenceReport equivalence_check(const AciParams& p, long characteristic);

}  // namespace lzlef
