#pragma once

#include <optional>
#include <vector>

#include "lzlef/monomial.hpp"

namespace lzlef {

/******** Triangular regions T_d(I) ********/

// The puncture of a minimal generator x^a y^b z^c in degree d: the upward
// triangle of side d - (a+b+c) anchored a rows from the bottom edge, b from
// the upper-right edge, c from the upper-left edge. Side 0 is a removed
// vertex (generators of degree exactly d).
struct Puncture {
    Monomial generator;
    int side_length = 0;

    std::array<int, 3> anchor() const {
        return {generator.ex, generator.ey, generator.ez};
    }
    bool operator==(const Puncture&) const = default;
};

// Surviving unit triangles of the side-d triangle: upward triangles carry
// the degree d-1 monomials outside I, downward triangles the degree d-2
// ones, both in descending revlex order. A region built by build_region
// stores the punctures of the defining ideal; a region produced by
// monomial_subregion stores the punctures of its own ideal J(T).
class TriangularRegion {
public:
    TriangularRegion(int d, std::vector<Monomial> up, std::vector<Monomial> down,
                     std::vector<Puncture> punctures);

    int d() const { return d_; }
    const std::vector<Monomial>& up_triangles() const { return up_; }
    const std::vector<Monomial>& down_triangles() const { return down_; }
    const std::vector<Puncture>& punctures() const { return punctures_; }

    bool has_up(const Monomial& m) const;
    bool has_down(const Monomial& m) const;
    bool empty() const { return up_.empty() && down_.empty(); }

    long balance() const { return long(up_.size()) - long(down_.size()); }
    bool is_balanced() const { return balance() == 0; }

private:
    int d_;
    std::vector<Monomial> up_, down_;
    std::vector<Puncture> punctures_;
};

TriangularRegion build_region(const MonomialIdeal& I, int d);

// Geometry of two punctures in the same T_d, decided by the degree of the
// lcm of their generators: < d shares unit edges, = d shares exactly one
// lattice point, > d shares nothing.
enum class PunctureRelation { disjoint, touching, overlapping };
PunctureRelation puncture_relation(const Puncture& p1, const Puncture& p2, int d);

// The part of T inside the triangle of the puncture of m, with labels
// divided by m; requires deg m < d.
TriangularRegion monomial_subregion(const TriangularRegion& T, const Monomial& m);

// Over-puncturing coefficient of I in degree d: puncture side lengths of
// the minimal generators of degree <= d, summed, minus d.
long over_puncturing(const MonomialIdeal& I, int d);
// Region version, computed from J(T).
long over_puncturing_region(const TriangularRegion& T);

// J(T): the largest ideal generated in degrees <= d-1 cutting out T.
MonomialIdeal region_ideal(const TriangularRegion& T);

inline bool is_perfectly_punctured(const TriangularRegion& T) {
    return over_puncturing_region(T) == 0;
}
inline bool is_perfectly_punctured(const MonomialIdeal& I, int d) {
    return over_puncturing(I, d) == 0;
}

// Least fixed point of: non-floating punctures touch the boundary of the
// full triangle or touch/overlap a non-floating puncture.
struct PunctureClassification {
    std::vector<Puncture> floating;
    std::vector<Puncture> non_floating;
};
PunctureClassification classify_punctures(const TriangularRegion& T);

}  // namespace lzlef
