#include "lzlef/render.hpp"

#include <cmath>
#include <sstream>

namespace lzlef {

std::string ascii_region(const TriangularRegion& T) {
    const int d = T.d();
    std::string out;
    // Strip t from the top holds up triangles with x-exponent d-1-t and the
    // down triangles between them, left to right from the y-heavy side.
    for (int t = 0; t < d; ++t) {
        std::string line(std::size_t(d - 1 - t), ' ');
        const int i = d - 1 - t;
        for (int j = t; j >= 0; --j) {
            const Monomial u{i, j, t - j};
            line += T.has_up(u) ? "/\\" : "##";
            if (j > 0) {
                const Monomial v{i, j - 1, t - j};
                line += T.has_down(v) ? "\\/" : "##";
            }
        }
        out += line;
        out += '\n';
    }
    return out;
}

namespace {

constexpr double kEdge = 24.0;
const double kH = kEdge * std::sqrt(3.0) / 2.0;

// Lattice point (p,q,r), p+q+r = d: p rows up from the bottom edge.
std::pair<double, double> point(int d, int p, int r) {
    return {kEdge * (r + p / 2.0), kH * (d - p)};
}

void triangle(std::ostringstream& os, std::pair<double, double> a,
              std::pair<double, double> b, std::pair<double, double> c,
              const char* fill) {
    os << "  <polygon points=\"" << a.first << ',' << a.second << ' ' << b.first << ','
       << b.second << ' ' << c.first << ',' << c.second << "\" fill=\"" << fill
       << "\" stroke=\"#202020\" stroke-width=\"1\"/>\n";
}

}  // namespace

std::string svg_region(const TriangularRegion& T) {
    const int d = T.d();
    std::ostringstream os;
    os.precision(2);
    os << std::fixed;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kEdge * d + 2
       << "\" height=\"" << kH * d + 2 << "\" viewBox=\"-1 -1 " << kEdge * d + 2 << ' '
       << kH * d + 2 << "\">\n";
    for (int i = 0; i <= d - 1; ++i)
        for (int j = 0; j + i <= d - 1; ++j) {
            const int k = d - 1 - i - j;
            const Monomial u{i, j, k};
            triangle(os, point(d, i + 1, k), point(d, i, k), point(d, i, k + 1),
                     T.has_up(u) ? "#ffffff" : "#9a9a9a");
        }
    for (int i = 0; i <= d - 2; ++i)
        for (int j = 0; j + i <= d - 2; ++j) {
            const int k = d - 2 - i - j;
            const Monomial v{i, j, k};
            triangle(os, point(d, i + 1, k), point(d, i + 1, k + 1), point(d, i, k + 1),
                     T.has_down(v) ? "#ffffff" : "#9a9a9a");
        }
    // puncture outlines per the shading convention
    for (const Puncture& P : T.punctures()) {
        const auto [a, b, c] = P.anchor();
        (void)b;
        const int s = P.side_length;
        if (s == 0) {
            const auto v = point(d, a, c);
            os << "  <circle cx=\"" << v.first << "\" cy=\"" << v.second
               << "\" r=\"3\" fill=\"#404040\"/>\n";
        } else {
            triangle(os, point(d, a + s, c), point(d, a, c), point(d, a, c + s),
                     "#404040");
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace lzlef
