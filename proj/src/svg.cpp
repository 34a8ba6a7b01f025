#include "santalo/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace santalo {

namespace {

constexpr double kCanvas = 800.0;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace

std::string render_svg(const YaoYaoTree& tree, const WeightedPointCloud& cloud) {
    if (tree.dim() != 2 || cloud.dim() != 2)
        throw UnsupportedDimension("SVG rendering supports 2D inputs only");
    const auto cones = leaf_cones(tree);

    Vec lo = tree.center, hi = tree.center;
    for (const Vec& p : cloud.points())
        for (int a = 0; a < 2; ++a) {
            lo[static_cast<std::size_t>(a)] = std::min(lo[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(a)]);
            hi[static_cast<std::size_t>(a)] = std::max(hi[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(a)]);
        }
    const double width = std::max(hi[0] - lo[0], 1e-9);
    const double height = std::max(hi[1] - lo[1], 1e-9);
    const double span = std::max(width, height) * 1.10; // 5% margin per side
    const Vec mid = {0.5 * (lo[0] + hi[0]), 0.5 * (lo[1] + hi[1])};
    const double px = kCanvas / span;

    auto tx = [&](const Vec& p) {
        return std::pair<double, double>{(p[0] - mid[0]) * px + kCanvas / 2.0,
                                         kCanvas / 2.0 - (p[1] - mid[1]) * px};
    };

    static const char* kFills[4] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728"};

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n";
    svg += "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";

    // Cone sectors as far-reaching polygons; the canvas clips them.
    const double reach = span * 3.0;
    for (std::size_t k = 0; k < cones.size(); ++k) {
        const Vec g1 = cones[k].generators().column(0);
        const Vec g2 = cones[k].generators().column(1);
        const Vec d1 = scale(g1, 1.0 / norm(g1));
        const Vec d2 = scale(g2, 1.0 / norm(g2));
        Vec dm = add(d1, d2);
        const double dm_norm = norm(dm);
        if (dm_norm > 1e-12) dm = scale(dm, 1.0 / dm_norm);
        const auto a0 = tx(tree.center);
        const auto a1 = tx(axpy(tree.center, reach, d1));
        const auto am = tx(axpy(tree.center, reach, dm));
        const auto a2 = tx(axpy(tree.center, reach, d2));
        svg += "<polygon points=\"" + num(a0.first) + "," + num(a0.second) + " " +
               num(a1.first) + "," + num(a1.second) + " " + num(am.first) + "," +
               num(am.second) + " " + num(a2.first) + "," + num(a2.second) + "\" fill=\"" +
               kFills[k % 4] + "\" fill-opacity=\"0.25\" stroke=\"none\"/>\n";
    }

    for (const Vec& p : cloud.points()) {
        const auto [x, y] = tx(p);
        svg += "<circle cx=\"" + num(x) + "\" cy=\"" + num(y) +
               "\" r=\"1.5\" fill=\"black\" fill-opacity=\"0.6\"/>\n";
    }

    const auto [cx, cy] = tx(tree.center);
    svg += "<line x1=\"" + num(cx - 8) + "\" y1=\"" + num(cy) + "\" x2=\"" + num(cx + 8) +
           "\" y2=\"" + num(cy) + "\" stroke=\"red\" stroke-width=\"2\"/>\n";
    svg += "<line x1=\"" + num(cx) + "\" y1=\"" + num(cy - 8) + "\" x2=\"" + num(cx) +
           "\" y2=\"" + num(cy + 8) + "\" stroke=\"red\" stroke-width=\"2\"/>\n";
    svg += "</svg>\n";
    return svg;
}

void write_svg_file(const std::string& path, const YaoYaoTree& tree,
                    const WeightedPointCloud& cloud) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + path);
    out << render_svg(tree, cloud);
}

} // namespace santalo
