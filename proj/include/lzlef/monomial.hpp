#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lzlef {

/******** Monomials in K[x,y,z] ********/

struct Monomial {
    int ex = 0;
    int ey = 0;
    int ez = 0;

    int degree() const { return ex + ey + ez; }
    bool is_unit() const { return ex == 0 && ey == 0 && ez == 0; }
    bool operator==(const Monomial&) const = default;
};

enum class Ordering { less, equal, greater };

// Graded reverse-lexicographic order: higher total degree wins; within a
// degree, m1 > m2 iff the last non-zero entry of the exponent difference
// is negative.
Ordering revlex_compare(const Monomial& m1, const Monomial& m2);

inline bool revlex_less(const Monomial& a, const Monomial& b) {
    return revlex_compare(a, b) == Ordering::less;
}
inline bool revlex_greater(const Monomial& a, const Monomial& b) {
    return revlex_compare(a, b) == Ordering::greater;
}

bool divides(const Monomial& m1, const Monomial& m2);  // m1 | m2
Monomial gcd(const Monomial& m1, const Monomial& m2);
Monomial lcm(const Monomial& m1, const Monomial& m2);
Monomial product(const Monomial& m1, const Monomial& m2);
// m1 / m2; throws std::invalid_argument when m2 does not divide m1.
Monomial quotient(const Monomial& m1, const Monomial& m2);

// All monomials of the given degree, listed in descending revlex order
// (x^j first, z^j last). Empty for negative degrees.
std::vector<Monomial> monomials_of_degree(int degree);

/******** Monomial ideals ********/

// A monomial ideal held by its unique minimal generating set, kept in
// descending revlex order.
class MonomialIdeal {
public:
    // Minimizes the given generators; throws std::invalid_argument on an
    // empty set.
    explicit MonomialIdeal(std::vector<Monomial> generators);

    const std::vector<Monomial>& generators() const { return gens_; }
    bool contains(const Monomial& m) const;

    // Artinian iff pure powers of x, y and z all appear among the
    // generators (the unit ideal counts).
    bool is_artinian() const;
    // Exponents (A,B,C) of the pure-power generators x^A, y^B, z^C;
    // throws std::invalid_argument when not Artinian.
    std::array<int, 3> pure_power_exponents() const;

    int max_generator_degree() const;

    bool operator==(const MonomialIdeal&) const = default;

private:
    std::vector<Monomial> gens_;
};

inline MonomialIdeal minimize(std::vector<Monomial> gens) {
    return MonomialIdeal(std::move(gens));
}

// Number of degree-j monomials not in I; 0 for j < 0.
long hilbert_function(const MonomialIdeal& I, long j);

// Monomials m not in I with xm, ym, zm all in I. Requires I Artinian.
std::vector<Monomial> socle_monomials(const MonomialIdeal& I);
// Their degrees as a sorted multiset.
std::vector<int> socle_degrees(const MonomialIdeal& I);

/******** Almost complete intersections ********/

// Parameters of I = (x^a, y^b, z^c, x^alpha y^beta z^gamma) with
// 0 < alpha < a, 0 < beta < b, 0 < gamma < c.
struct AciParams {
    int a, b, c;
    int alpha, beta, gamma;

    long sum() const {
        return long(a) + b + c + alpha + beta + gamma;
    }
    bool degree_is_integer() const { return sum() % 3 == 0; }
    // The peak degree d = sum/3; throws when d is not an integer.
    int peak_degree() const;

    // Throws std::invalid_argument naming the violated bound.
    void validate() const;
};

MonomialIdeal aci_ideal(const AciParams& p);
// True iff a - alpha = b - beta = c - gamma.
bool is_level(const AciParams& p);

/******** Text grammar ********/

// "x^3 y z^2" or "x3yz2"; "1" is the unit monomial. Comma-separated
// monomials form an ideal literal.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position(position) {}
    std::size_t position;
};

Monomial parse_monomial(std::string_view text);
std::vector<Monomial> parse_ideal(std::string_view text);

std::string to_string(const Monomial& m);
std::string to_string(const MonomialIdeal& I);

}  // namespace lzlef
