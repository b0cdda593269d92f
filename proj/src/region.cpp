#include "lzlef/region.hpp"

#include <algorithm>

namespace lzlef {

TriangularRegion::TriangularRegion(int d, std::vector<Monomial> up,
                                   std::vector<Monomial> down,
                                   std::vector<Puncture> punctures)
    : d_(d), up_(std::move(up)), down_(std::move(down)), punctures_(std::move(punctures)) {
    if (d_ < 1) throw std::invalid_argument("TriangularRegion: d must be >= 1");
    std::sort(up_.begin(), up_.end(), revlex_greater);
    std::sort(down_.begin(), down_.end(), revlex_greater);
}

bool TriangularRegion::has_up(const Monomial& m) const {
    return std::binary_search(up_.begin(), up_.end(), m, revlex_greater);
}

bool TriangularRegion::has_down(const Monomial& m) const {
    return std::binary_search(down_.begin(), down_.end(), m, revlex_greater);
}

TriangularRegion build_region(const MonomialIdeal& I, int d) {
    if (d < 1) throw std::invalid_argument("build_region: d must be >= 1");
    std::vector<Monomial> up, down;
    for (const Monomial& m : monomials_of_degree(d - 1))
        if (!I.contains(m)) up.push_back(m);
    for (const Monomial& m : monomials_of_degree(d - 2))
        if (!I.contains(m)) down.push_back(m);
    std::vector<Puncture> punctures;
    for (const Monomial& g : I.generators())
        if (g.degree() <= d) punctures.push_back({g, d - g.degree()});
    return TriangularRegion(d, std::move(up), std::move(down), std::move(punctures));
}

PunctureRelation puncture_relation(const Puncture& p1, const Puncture& p2, int d) {
    const int t = d - lcm(p1.generator, p2.generator).degree();
    if (t >= 1) return PunctureRelation::overlapping;
    if (t == 0) return PunctureRelation::touching;
    return PunctureRelation::disjoint;
}

TriangularRegion monomial_subregion(const TriangularRegion& T, const Monomial& m) {
    if (m.degree() >= T.d())
        throw std::invalid_argument("monomial_subregion: deg m must be < d");
    const int dd = T.d() - m.degree();
    std::vector<Monomial> up, down;
    for (const Monomial& u : T.up_triangles())
        if (divides(m, u)) up.push_back(quotient(u, m));
    for (const Monomial& v : T.down_triangles())
        if (divides(m, v)) down.push_back(quotient(v, m));
    TriangularRegion bare(dd, std::move(up), std::move(down), {});
    const MonomialIdeal J = region_ideal(bare);
    std::vector<Puncture> punctures;
    for (const Monomial& g : J.generators())
        if (g.degree() <= dd) punctures.push_back({g, dd - g.degree()});
    return TriangularRegion(dd, bare.up_triangles(), bare.down_triangles(),
                            std::move(punctures));
}

long over_puncturing(const MonomialIdeal& I, int d) {
    if (d < 1) throw std::invalid_argument("over_puncturing: d must be >= 1");
    long sum = 0;
    for (const Monomial& g : I.generators())
        if (g.degree() <= d) sum += d - g.degree();
    return sum - d;
}

long over_puncturing_region(const TriangularRegion& T) {
    return over_puncturing(region_ideal(T), T.d());
}

MonomialIdeal region_ideal(const TriangularRegion& T) {
    std::vector<Monomial> gens;
    for (int e = 0; e <= T.d() - 1; ++e)
        for (const Monomial& m : monomials_of_degree(e)) {
            bool survivor = false;
            for (const Monomial& u : T.up_triangles())
                if (divides(m, u)) {
                    survivor = true;
                    break;
                }
            if (!survivor)
                for (const Monomial& v : T.down_triangles())
                    if (divides(m, v)) {
                        survivor = true;
                        break;
                    }
            if (!survivor) gens.push_back(m);
        }
    if (gens.empty()) {
        // Nothing of degree <= d-1 is fully punctured: J(T) cuts nothing,
        // represented by a generator beyond every label degree.
        gens.push_back({T.d(), T.d(), T.d()});
    }
    return MonomialIdeal(std::move(gens));
}

PunctureClassification classify_punctures(const TriangularRegion& T) {
    const auto& ps = T.punctures();
    const std::size_t n = ps.size();
    std::vector<bool> fixed(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        const auto a = ps[i].anchor();
        if (a[0] == 0 || a[1] == 0 || a[2] == 0) fixed[i] = true;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (fixed[i]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!fixed[j] || i == j) continue;
                if (puncture_relation(ps[i], ps[j], T.d()) != PunctureRelation::disjoint) {
                    fixed[i] = true;
                    changed = true;
                    break;
                }
            }
        }
    }
    PunctureClassification out;
    for (std::size_t i = 0; i < n; ++i)
        (fixed[i] ? out.non_floating : out.floating).push_back(ps[i]);
    return out;
}

}  // namespace lzlef
