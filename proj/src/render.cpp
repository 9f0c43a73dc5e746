#include "brickwall/render.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace brickwall {

namespace {

std::string num(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    while (s.back() == '0')
        s.pop_back();
    if (s.back() == '.')
        s.pop_back();
    if (s == "-0")
        s = "0";
    return s;
}

}

std::string to_svg(const pattern& p, const render_style& style)
{
    if (p.bricks.empty())
        throw error("cannot render an empty pattern");
    if (!(style.cell_size > 0))
        throw error("cell size must be positive");

    std::int64_t min_x = std::numeric_limits<std::int64_t>::max();
    std::int64_t max_x = std::numeric_limits<std::int64_t>::min();
    std::int64_t min_y = min_x;
    std::int64_t max_y = max_x;
    for (const auto& b : p.bricks) {
        const auto& t = p.type_of(b);
        min_x = std::min(min_x, b.x);
        max_x = std::max(max_x, b.x + t.width);
        min_y = std::min(min_y, b.y);
        max_y = std::max(max_y, b.y + t.height);
    }
    const double cs = style.cell_size;
    const double pad = style.mortar_width;
    const double width = static_cast<double>(max_x - min_x) * cs + 2 * pad;
    const double height = static_cast<double>(max_y - min_y) * cs + 2 * pad;

    pattern sorted = p;
    sort_bricks(sorted);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " << num(width) << " "
        << num(height) << "\" width=\"" << num(width) << "\" height=\"" << num(height) << "\">\n";
    out << "<title>" << p.rule_name << " n=" << p.level << "</title>\n";
    if (!style.background.empty())
        out << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height) << "\" fill=\""
            << style.background << "\"/>\n";
    out << "<g stroke=\"" << style.mortar_color << "\" stroke-width=\"" << num(style.mortar_width) << "\">\n";
    for (const auto& b : sorted.bricks) {
        const auto& t = sorted.type_of(b);
        std::string fill = t.color;
        if (fill.empty())
            fill = style.palette.empty() ? "#c0c0c0" : style.palette[b.type % style.palette.size()];
        const double x = static_cast<double>(b.x - min_x) * cs + pad;
        const double y = static_cast<double>(max_y - b.y - t.height) * cs + pad;
        out << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(static_cast<double>(t.width) * cs)
            << "\" height=\"" << num(static_cast<double>(t.height) * cs) << "\" fill=\"" << fill << "\"/>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}
