#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "frobsesh/errors.hpp"
#include "frobsesh/numeric.hpp"
#include "frobsesh/seshadri.hpp"
#include "frobsesh/toric.hpp"

namespace frobsesh {

namespace detail {

/// Fixed-point decimal with two digits, computed in exact arithmetic so the
/// emitted file is byte-stable across platforms.
inline std::string fixed2(const Rat& v) {
    Int scaled = floor_rat(v * 100 + Rat(1, 2));
    const bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    const Int whole = scaled / 100;
    const Int frac = scaled % 100;
    std::string out = neg ? "-" : "";
    out += int_str(whole);
    out += '.';
    const std::string f = int_str(frac);
    out += f.size() == 1 ? "0" + f : f;
    return out;
}

struct SvgPoint {
    Rat x;
    Rat y;
};

/// Quadrant index for exact angle sorting, counterclockwise from +x axis.
inline int svg_quadrant(const SvgPoint& p) {
    if (p.x > 0 && p.y >= 0) return 0;
    if (p.x <= 0 && p.y > 0) return 1;
    if (p.x < 0 && p.y <= 0) return 2;
    return 3;
}

/// Sort polygon vertices counterclockwise around their centroid, exactly.
inline void sort_ccw(std::vector<SvgPoint>& pts) {
    Rat cx = 0, cy = 0;
    for (const auto& p : pts) {
        cx += p.x;
        cy += p.y;
    }
    cx /= int(pts.size());
    cy /= int(pts.size());
    std::sort(pts.begin(), pts.end(), [&](const SvgPoint& a, const SvgPoint& b) {
        const SvgPoint da{a.x - cx, a.y - cy};
        const SvgPoint db{b.x - cx, b.y - cy};
        const int qa = svg_quadrant(da);
        const int qb = svg_quadrant(db);
        if (qa != qb) return qa < qb;
        const Rat cross = da.x * db.y - da.y * db.x;
        if (cross != 0) return cross > 0;
        return da.x * da.x + da.y * da.y < db.x * db.x + db.y * db.y;
    });
}

} // namespace detail

/// Render the chart of D at one fixed point as a standalone SVG: the charted
/// polytope, plus the inscribed eps*simplex and epsF*cube, both dashed.
/// Pixel scale per lattice unit is fixed, so files for the same input are
/// identical byte-for-byte.  Only surfaces (dim 2) are drawable.
inline std::string render_svg(const ToricDivisor& d, int cone_index) {
    if (d.fan->dim != 2)
        throw DimensionUnsupported("svg rendering needs dim 2, got " +
                                   std::to_string(d.fan->dim));
    const auto [chart, cp] = chart_at(d, cone_index);
    const LatticePolytopeH poly = polytope_of(d);

    std::vector<detail::SvgPoint> pts;
    for (const auto& v : poly.vertices) {
        RationalVector diff(2);
        for (int i = 0; i < 2; ++i) diff[i] = Rat(v[i]) - Rat(chart.vertex[i]);
        Rat x = Rat(chart.to_local(0, 0)) * diff[0] + Rat(chart.to_local(0, 1)) * diff[1];
        Rat y = Rat(chart.to_local(1, 0)) * diff[0] + Rat(chart.to_local(1, 1)) * diff[1];
        pts.push_back({x, y});
    }
    detail::sort_ccw(pts);

    const Rat eps = classical_seshadri(cp);
    const Rat eps_f = frobenius_seshadri(cp);

    Rat max_x = 1, max_y = 1;
    for (const auto& p : pts) {
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }

    const int px = 90;      // pixels per lattice unit, fixed
    const int margin = 40;
    const Rat width_r = max_x * px + 2 * margin;
    const Rat height_r = max_y * px + 2 * margin + 30;
    const long long width = ceil_rat(width_r).convert_to<long long>();
    const long long height = ceil_rat(height_r).convert_to<long long>();

    const auto X = [&](const Rat& x) { return detail::fixed2(x * px + margin); };
    const auto Y = [&](const Rat& y) { return detail::fixed2((max_y - y) * px + margin); };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
         " " + std::to_string(height) + "\">\n";
    s += "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

    // Lattice dots over the bounding box of the charted polytope.
    const long long gx = ceil_rat(max_x).convert_to<long long>();
    const long long gy = ceil_rat(max_y).convert_to<long long>();
    for (long long ix = 0; ix <= gx; ++ix)
        for (long long iy = 0; iy <= gy; ++iy)
            s += "  <circle cx=\"" + X(Rat(ix)) + "\" cy=\"" + Y(Rat(iy)) +
                 "\" r=\"2\" fill=\"#c2c7d0\"/>\n";

    s += "  <polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) s += ' ';
        s += X(pts[i].x) + "," + Y(pts[i].y);
    }
    s += "\" fill=\"#e8edf7\" fill-opacity=\"0.65\" stroke=\"#1b2430\" stroke-width=\"2\"/>\n";

    // Inscribed scaled simplex (classical constant), dashed, very thick.
    if (eps > 0) {
        s += "  <polygon points=\"" + X(Rat(0)) + "," + Y(Rat(0)) + " " + X(eps) + "," +
             Y(Rat(0)) + " " + X(Rat(0)) + "," + Y(eps) +
             "\" fill=\"none\" stroke=\"#1d4ed8\" stroke-width=\"4\" stroke-dasharray=\"10,7\"/>\n";
    }
    // Inscribed scaled cube (Frobenius constant), dashed, very thick.
    if (eps_f > 0) {
        s += "  <rect x=\"" + X(Rat(0)) + "\" y=\"" + Y(eps_f) + "\" width=\"" +
             detail::fixed2(eps_f * px) + "\" height=\"" + detail::fixed2(eps_f * px) +
             "\" fill=\"none\" stroke=\"#b91c1c\" stroke-width=\"4\" stroke-dasharray=\"4,6\"/>\n";
    }

    s += "  <circle cx=\"" + X(Rat(0)) + "\" cy=\"" + Y(Rat(0)) +
         "\" r=\"4.5\" fill=\"#1b2430\"/>\n";
    s += "  <text x=\"" + std::to_string(margin) + "\" y=\"" + std::to_string(height - 14) +
         "\" font-family=\"monospace\" font-size=\"15\" fill=\"#1b2430\">cone " +
         std::to_string(cone_index) + "  eps=" + rat_str(eps) + "  epsF=" + rat_str(eps_f) +
         "</text>\n";
    s += "</svg>\n";
    return s;
}

} // namespace frobsesh
