#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lzlef/intmatrix.hpp"
#include "lzlef/region.hpp"

namespace lzlef {

/******** Lozenge tilings via the bi-adjacency matrix ********/

// Z(T): rows indexed by the down triangles, columns by the up triangles,
// both in descending revlex; entry 1 iff the down label divides the up
// label with a single-variable quotient. Transpose of the matrix of
// x(x+y+z): [R/I]_{d-2} -> [R/I]_{d-1} in those bases.
IntegerMatrix biadjacency(const TriangularRegion& T);

// A tiling as a perfect matching: (down label, up label) pairs.
struct Tiling {
    std::vector<std::pair<Monomial, Monomial>> lozenges;
    bool operator==(const Tiling&) const = default;
};

// Tileability criterion for balanced T_d(I): no monomial subregion has
// more down than up triangles. Throws std::invalid_argument on unbalanced
// input (use the matching oracle there).
bool is_tileable_structural(const TriangularRegion& T);

// Independent oracle: maximum bipartite matching; works on any region.
bool is_tileable_matching(const TriangularRegion& T);

// All tilings by backtracking, truncated at the limit (default 10^6). The
// empty region has exactly one (empty) tiling.
std::vector<Tiling> enumerate_tilings(const TriangularRegion& T,
                                      std::optional<long> limit = std::nullopt);

// Number of tilings: the permanent of Z(T) for balanced regions, 0
// otherwise.
BigInt tiling_count(const TriangularRegion& T);

}  // namespace lzlef
