#pragma once

#include <string>

#include "lzlef/region.hpp"

namespace lzlef {

// One text line per strip: up = "/\", down = "\/", removed cells "##".
std::string ascii_region(const TriangularRegion& T);

// Equilateral grid with 24-unit triangle edges; removed cells shaded,
// punctures dark-filled.
std::string svg_region(const TriangularRegion& T);

}  // namespace lzlef
