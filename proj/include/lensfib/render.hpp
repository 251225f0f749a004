#pragma once

#include <string>
#include <vector>

#include "lensfib/lenslift.hpp"

namespace lensfib {

// ASCII picture of a band diagram: one row per letter between two rail rows.
// Strand k sits at text column 2k; the glyph between columns c, c+1 is 'X'
// for sigma_c and 'x' for its inverse.
struct AsciiDiagram {
    std::vector<std::string> lines;
};

AsciiDiagram render_band(const BandDiagram& band);

// Inverse of render_band; used to check the rendering is faithful.
BandDiagram parse_rendered(const AsciiDiagram& diagram);

} // namespace lensfib
