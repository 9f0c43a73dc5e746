#pragma once

#include <string>
#include <vector>

#include "brickwall/engine.hpp"

namespace brickwall {

struct render_style {
    double cell_size = 20;
    double mortar_width = 1.5;
    std::string mortar_color = "#808080";
    std::string background; // empty: transparent
    std::vector<std::string> palette = default_palette();
};

// SVG 1.1 document with one rect per brick. Lattice row 0 is drawn at the
// bottom. Coordinates are printed with at most three decimals.
std::string to_svg(const pattern& p, const render_style& style = {});

}
