#include "fancut/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace fancut {

namespace {

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

// World y grows upward; SVG y grows downward.
std::string pt(const Vec2& p) { return num(p.x) + "," + num(-p.y); }

void draw_disk(std::ostringstream& out, const Vec2& c, double r, const std::string& fill,
               const std::string& extra = "") {
    out << "  <circle cx=\"" << num(c.x) << "\" cy=\"" << num(-c.y) << "\" r=\"" << num(r)
        << "\" fill=\"" << fill << "\"" << extra << "/>\n";
}

void draw_measure(std::ostringstream& out, const Measure& m, const std::string& color) {
    std::visit(
        [&](const auto& mm) {
            using T = std::decay_t<decltype(mm)>;
            if constexpr (std::is_same_v<T, DiskBlobMeasure>) {
                for (const Blob& b : mm.blobs) draw_disk(out, b.center, b.radius, color);
            } else if constexpr (std::is_same_v<T, PolygonMeasure>) {
                out << "  <polygon points=\"";
                for (std::size_t i = 0; i < mm.vertices.size(); ++i)
                    out << (i ? " " : "") << pt(mm.vertices[i]);
                out << "\" fill=\"" << color << "\" fill-opacity=\"0.35\" stroke=\"" << color
                    << "\"/>\n";
            } else {
                draw_disk(out, mm.mean, 0.04 * mm.sigma, color);
                for (double k : {1.0, 2.0})
                    out << "  <circle cx=\"" << num(mm.mean.x) << "\" cy=\"" << num(-mm.mean.y)
                        << "\" r=\"" << num(k * mm.sigma) << "\" fill=\"none\" stroke=\"" << color
                        << "\" stroke-dasharray=\"0.02,0.02\" stroke-width=\"0.01\"/>\n";
            }
        },
        m);
}

}  // namespace

std::string render_svg(const Problem& p, const std::optional<EquipartitionResult>& solution,
                       const std::vector<Vec2>& curve_overlay) {
    const SupportBounds joint = joint_support_bounds(p.m1, p.m2);
    const Vec2 apex = solution ? solution->t : joint.center;
    double extent = joint.radius;
    extent = std::max(extent, (apex - joint.center).norm() + 0.2 * joint.radius);
    for (const Vec2& q : curve_overlay)
        extent = std::max(extent, (q - joint.center).norm());
    extent *= 1.1;  // 10% margin

    const Vec2 c = joint.center;
    const double stroke = extent / 240.0;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(c.x - extent) << " "
        << num(-c.y - extent) << " " << num(2 * extent) << " " << num(2 * extent) << "\">\n";
    out << "  <rect x=\"" << num(c.x - extent) << "\" y=\"" << num(-c.y - extent) << "\" width=\""
        << num(2 * extent) << "\" height=\"" << num(2 * extent) << "\" fill=\"white\"/>\n";

    if (solution) {
        const Wedge w = wedge_of(p.fan, solution->j, solution->t);
        const double L = 4.0 * extent;
        const Vec2 a = w.apex + w.dir_lo * L;
        const Vec2 b = w.apex + w.dir_hi * L;
        // CCW in world coordinates is CW on the flipped SVG y axis.
        out << "  <path d=\"M " << pt(w.apex) << " L " << pt(a) << " A " << num(L) << " " << num(L)
            << " 0 " << (w.angle > 3.14159265358979 ? 1 : 0) << " 0 " << pt(b)
            << " Z\" fill=\"#ffd24d\" fill-opacity=\"0.45\" stroke=\"none\"/>\n";
    }

    for (std::size_t j = 0; j < p.fan.size(); ++j) {
        const Vec2 tip = apex + p.fan.directions[j] * (3.0 * extent);
        out << "  <line x1=\"" << num(apex.x) << "\" y1=\"" << num(-apex.y) << "\" x2=\""
            << num(tip.x) << "\" y2=\"" << num(-tip.y) << "\" stroke=\"#444444\" stroke-width=\""
            << num(stroke) << "\"/>\n";
    }
    draw_disk(out, apex, 2.0 * stroke, "#000000");

    draw_measure(out, p.m1, "#d62728");
    draw_measure(out, p.m2, "#1f77b4");

    if (!curve_overlay.empty()) {
        out << "  <polyline points=\"";
        for (std::size_t i = 0; i < curve_overlay.size(); ++i)
            out << (i ? " " : "") << pt(curve_overlay[i]);
        out << "\" fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"" << num(stroke) << "\"/>\n";
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace fancut
