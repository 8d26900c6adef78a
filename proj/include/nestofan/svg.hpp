#pragma once

// SVG picture of a rank-2 fan: labeled ray arrows over shaded cones, and
// beside it the polygon {m : <m, u> >= -1 for every ray u}, one vertex per
// maximal cone.

#include "fan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace nestofan {

namespace detail {

inline std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", std::abs(x) < 0.005 ? 0.0 : x);
    return buf;
}

inline double to_double(const Integer& x) { return x.convert_to<double>(); }

}  // namespace detail

inline std::string render_svg(const Fan& f) {
    if (f.rank() != 2) throw InputError("render supports rank-2 fans only");
    constexpr double size = 320, reach = 120, cx = size / 2, cy = size / 2, px = size + size / 2;
    auto dir = [&](std::size_t r) {
        const double x = detail::to_double(f.ray(r)[0]), y = detail::to_double(f.ray(r)[1]);
        const double len = std::hypot(x, y);
        return std::pair{x / len, y / len};
    };
    // svg y grows downward
    auto at = [](double ox, double oy, double x, double y) {
        return detail::num(ox + x) + "," + detail::num(oy - y);
    };
    std::vector<Cone> cones = f.max_cones();
    auto angle = [&](const Cone& c) {
        double x = 0, y = 0;
        for (auto r : c.rays) {
            auto [dx, dy] = dir(r);
            x += dx;
            y += dy;
        }
        return std::atan2(y, x);
    };
    std::stable_sort(cones.begin(), cones.end(), [&](const Cone& a, const Cone& b) { return angle(a) < angle(b); });

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::num(2 * size) +
                      "\" height=\"" + detail::num(size) + "\" viewBox=\"0 0 " + detail::num(2 * size) + " " +
                      detail::num(size) + "\">\n";
    out += "<defs><marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"7\" "
           "markerHeight=\"7\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#222\"/></marker></defs>\n";
    out += "<g id=\"cones\">\n";
    const char* fills[] = {"#c6dbef", "#fdd0a2", "#c7e9c0", "#dadaeb"};
    for (std::size_t k = 0; k < cones.size(); ++k) {
        if (cones[k].dim() != 2) continue;
        auto [ax, ay] = dir(cones[k].rays[0]);
        auto [bx, by] = dir(cones[k].rays[1]);
        out += "<polygon class=\"sector\" points=\"" + at(cx, cy, 0, 0) + " " + at(cx, cy, reach * ax, reach * ay) +
               " " + at(cx, cy, reach * bx, reach * by) + "\" fill=\"" + fills[k % 4] +
               "\" fill-opacity=\"0.8\" stroke=\"none\"/>\n";
    }
    out += "</g>\n<g id=\"rays\">\n";
    for (std::size_t r = 0; r < f.rays().size(); ++r) {
        auto [x, y] = dir(r);
        out += "<line class=\"ray\" x1=\"" + detail::num(cx) + "\" y1=\"" + detail::num(cy) + "\" x2=\"" +
               detail::num(cx + reach * x) + "\" y2=\"" + detail::num(cy - reach * y) +
               "\" stroke=\"#222\" stroke-width=\"2\" marker-end=\"url(#head)\"/>\n";
        const std::string text = f.labels()[r] ? f.labels()[r]->str() : f.ray(r).str();
        out += "<text x=\"" + detail::num(cx + (reach + 16) * x) + "\" y=\"" + detail::num(cy - (reach + 16) * y + 4) +
               "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" + text + "</text>\n";
    }
    out += "</g>\n";

    // <m, u> = -1 = <m, v> for the two rays u, v of each cone
    std::vector<std::pair<double, double>> vertices;
    for (const auto& c : cones) {
        if (c.dim() != 2) continue;
        const double a = detail::to_double(f.ray(c.rays[0])[0]), b = detail::to_double(f.ray(c.rays[0])[1]);
        const double p = detail::to_double(f.ray(c.rays[1])[0]), q = detail::to_double(f.ray(c.rays[1])[1]);
        const double det = a * q - b * p;
        vertices.emplace_back((b - q) / det, (p - a) / det);
    }
    double extent = 0;
    for (auto [x, y] : vertices) extent = std::max({extent, std::abs(x), std::abs(y)});
    const double scale = extent > 0 ? reach / extent : 1;
    out += "<polygon id=\"dual\" points=\"";
    for (std::size_t k = 0; k < vertices.size(); ++k)
        out += (k ? " " : "") + at(px, cy, scale * vertices[k].first, scale * vertices[k].second);
    out += "\" fill=\"#fee6ce\" stroke=\"#222\" stroke-width=\"2\"/>\n";
    for (auto [x, y] : vertices)
        out += "<circle class=\"vertex\" cx=\"" + detail::num(px + scale * x) + "\" cy=\"" +
               detail::num(cy - scale * y) + "\" r=\"3\" fill=\"#222\"/>\n";
    out += "</svg>\n";
    return out;
}

}  // namespace nestofan
