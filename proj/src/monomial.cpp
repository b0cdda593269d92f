#include "lzlef/monomial.hpp"

#include <algorithm>
#include <cctype>

namespace lzlef {

Ordering revlex_compare(const Monomial& m1, const Monomial& m2) {
    if (m1.degree() != m2.degree())
        return m1.degree() > m2.degree() ? Ordering::greater : Ordering::less;
    const int dx = m1.ex - m2.ex, dy = m1.ey - m2.ey, dz = m1.ez - m2.ez;
    int last = 0;
    if (dz != 0) last = dz;
    else if (dy != 0) last = dy;
    else if (dx != 0) last = dx;
    if (last == 0) return Ordering::equal;
    return last < 0 ? Ordering::greater : Ordering::less;
}

bool divides(const Monomial& m1, const Monomial& m2) {
    return m1.ex <= m2.ex && m1.ey <= m2.ey && m1.ez <= m2.ez;
}

Monomial gcd(const Monomial& m1, const Monomial& m2) {
    return {std::min(m1.ex, m2.ex), std::min(m1.ey, m2.ey), std::min(m1.ez, m2.ez)};
}

Monomial lcm(const Monomial& m1, const Monomial& m2) {
    return {std::max(m1.ex, m2.ex), std::max(m1.ey, m2.ey), std::max(m1.ez, m2.ez)};
}

Monomial product(const Monomial& m1, const Monomial& m2) {
    return {m1.ex + m2.ex, m1.ey + m2.ey, m1.ez + m2.ez};
}

Monomial quotient(const Monomial& m1, const Monomial& m2) {
    if (!divides(m2, m1))
        throw std::invalid_argument("quotient: " + to_string(m2) + " does not divide " +
                                    to_string(m1));
    return {m1.ex - m2.ex, m1.ey - m2.ey, m1.ez - m2.ez};
}

std::vector<Monomial> monomials_of_degree(int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    out.reserve(std::size_t(degree + 1) * (degree + 2) / 2);
    for (int ex = 0; ex <= degree; ++ex)
        for (int ey = 0; ey + ex <= degree; ++ey)
            out.push_back({ex, ey, degree - ex - ey});
    std::sort(out.begin(), out.end(), revlex_greater);
    return out;
}

MonomialIdeal::MonomialIdeal(std::vector<Monomial> generators) {
    if (generators.empty())
        throw std::invalid_argument("MonomialIdeal: empty generating set");
    std::sort(generators.begin(), generators.end(), revlex_greater);
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (const Monomial& g : generators) {
        bool redundant = false;
        for (const Monomial& h : generators)
            if (!(h == g) && divides(h, g)) {
                redundant = true;
                break;
            }
        if (!redundant) gens_.push_back(g);
    }
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const Monomial& g : gens_)
        if (divides(g, m)) return true;
    return false;
}

bool MonomialIdeal::is_artinian() const {
    bool px = false, py = false, pz = false;
    for (const Monomial& g : gens_) {
        if (g.ey == 0 && g.ez == 0) px = true;
        if (g.ex == 0 && g.ez == 0) py = true;
        if (g.ex == 0 && g.ey == 0) pz = true;
    }
    return px && py && pz;
}

std::array<int, 3> MonomialIdeal::pure_power_exponents() const {
    std::array<int, 3> out{-1, -1, -1};
    for (const Monomial& g : gens_) {
        if (g.ey == 0 && g.ez == 0 && (out[0] < 0 || g.ex < out[0])) out[0] = g.ex;
        if (g.ex == 0 && g.ez == 0 && (out[1] < 0 || g.ey < out[1])) out[1] = g.ey;
        if (g.ex == 0 && g.ey == 0 && (out[2] < 0 || g.ez < out[2])) out[2] = g.ez;
    }
    if (out[0] < 0 || out[1] < 0 || out[2] < 0)
        throw std::invalid_argument("ideal is not Artinian: missing a pure power of x, y or z");
    return out;
}

int MonomialIdeal::max_generator_degree() const {
    int m = 0;
    for (const Monomial& g : gens_) m = std::max(m, g.degree());
    return m;
}

long hilbert_function(const MonomialIdeal& I, long j) {
    if (j < 0) return 0;
    long count = 0;
    for (int ex = 0; ex <= j; ++ex)
        for (int ey = 0; ey + ex <= j; ++ey)
            if (!I.contains({ex, ey, int(j) - ex - ey})) ++count;
    return count;
}

std::vector<Monomial> socle_monomials(const MonomialIdeal& I) {
    const auto [A, B, C] = I.pure_power_exponents();
    std::vector<Monomial> out;
    for (int ex = 0; ex < A; ++ex)
        for (int ey = 0; ey < B; ++ey)
            for (int ez = 0; ez < C; ++ez) {
                const Monomial m{ex, ey, ez};
                if (I.contains(m)) continue;
                if (I.contains({ex + 1, ey, ez}) && I.contains({ex, ey + 1, ez}) &&
                    I.contains({ex, ey, ez + 1}))
                    out.push_back(m);
            }
    std::sort(out.begin(), out.end(), revlex_greater);
    return out;
}

std::vector<int> socle_degrees(const MonomialIdeal& I) {
    std::vector<int> out;
    for (const Monomial& m : socle_monomials(I)) out.push_back(m.degree());
    std::sort(out.begin(), out.end());
    return out;
}

int AciParams::peak_degree() const {
    if (!degree_is_integer())
        throw std::invalid_argument("peak_degree: a+b+c+alpha+beta+gamma is not divisible by 3");
    return int(sum() / 3);
}

void AciParams::validate() const {
    if (alpha <= 0) throw std::invalid_argument("AciParams: alpha must be positive");
    if (beta <= 0) throw std::invalid_argument("AciParams: beta must be positive");
    if (gamma <= 0) throw std::invalid_argument("AciParams: gamma must be positive");
    if (alpha >= a) throw std::invalid_argument("AciParams: alpha < a violated");
    if (beta >= b) throw std::invalid_argument("AciParams: beta < b violated");
    if (gamma >= c) throw std::invalid_argument("AciParams: gamma < c violated");
}

MonomialIdeal aci_ideal(const AciParams& p) {
    p.validate();
    MonomialIdeal I(std::vector<Monomial>{
        {p.a, 0, 0}, {0, p.b, 0}, {0, 0, p.c}, {p.alpha, p.beta, p.gamma}});
    if (I.generators().size() != 4)
        throw std::invalid_argument("AciParams: ideal is not minimally 4-generated");
    return I;
}

bool is_level(const AciParams& p) {
    return p.a - p.alpha == p.b - p.beta && p.b - p.beta == p.c - p.gamma;
}

namespace {

std::size_t skip_spaces(std::string_view s, std::size_t pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    return pos;
}

}  // namespace

Monomial parse_monomial(std::string_view text) {
    Monomial m;
    std::size_t pos = skip_spaces(text, 0);
    if (pos >= text.size()) throw ParseError("empty monomial", pos);
    if (text[pos] == '1') {
        ++pos;
        pos = skip_spaces(text, pos);
        if (pos != text.size()) throw ParseError("unexpected character after '1'", pos);
        return m;
    }
    bool any = false;
    while (pos < text.size()) {
        const char v = text[pos];
        int* slot = nullptr;
        if (v == 'x') slot = &m.ex;
        else if (v == 'y') slot = &m.ey;
        else if (v == 'z') slot = &m.ez;
        else throw ParseError(std::string("expected variable x, y or z, got '") + v + "'", pos);
        ++pos;
        if (pos < text.size() && text[pos] == '^') ++pos;
        int exp = 1;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            exp = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                exp = exp * 10 + (text[pos] - '0');
                if (exp > 1000000) throw ParseError("exponent too large", pos);
                ++pos;
            }
        }
        *slot += exp;
        any = true;
        pos = skip_spaces(text, pos);
    }
    if (!any) throw ParseError("empty monomial", pos);
    return m;
}

std::vector<Monomial> parse_ideal(std::string_view text) {
    std::vector<Monomial> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view piece = text.substr(start, comma == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : comma - start);
        try {
            out.push_back(parse_monomial(piece));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), start + e.position);
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string to_string(const Monomial& m) {
    if (m.is_unit()) return "1";
    std::string s;
    const auto app = [&s](char v, int e) {
        if (e == 0) return;
        s += v;
        if (e > 1) s += "^" + std::to_string(e);
    };
    app('x', m.ex);
    app('y', m.ey);
    app('z', m.ez);
    return s;
}

std::string to_string(const MonomialIdeal& I) {
    std::string s;
    for (std::size_t i = 0; i < I.generators().size(); ++i) {
        if (i) s += ",";
        s += to_string(I.generators()[i]);
    }
    return s;
}

}  // namespace lzlef
