#include "fancut/halving.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace fancut {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPiWedgeTol = 1e-12;

/// Bisection for the boundary of a monotone predicate: pred(lo) is false,
/// pred(hi) is true; returns the flip point to resolution res.
template <typename Pred>
double bisect_boundary(Pred pred, double lo, double hi, double res) {
    for (int it = 0; it < 200 && hi - lo > res; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (pred(mid))
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

const char* relation_name(Relation r) {
    switch (r) {
        case Relation::first_inside: return "FIRST_INSIDE";
        case Relation::second_inside: return "SECOND_INSIDE";
        case Relation::cross: return "CROSS";
        case Relation::shared_ray: return "SHARED_RAY";
    }
    return "?";
}

HalvingLine halving_line(const Measure& m, const Vec2& direction, double /*tol*/) {
    HalvingLine h;
    h.direction = normalized(direction);
    h.normal = perp(h.direction);

    const SupportBounds sb = support_bounds(m);
    const double c0 = dot(sb.center, h.normal);
    const double margin = 1e-6 * (sb.radius + 1.0);
    const double lo = c0 - sb.radius - margin;
    const double hi = c0 + sb.radius + margin;
    const double res = 1e-12 * std::max({sb.radius, std::abs(c0), 1.0});

    // Mass of {p.n <= c} is nondecreasing in c, so the 1/2 level set is a
    // closed interval; locate both edges.
    auto mass = [&](double c) { return halfplane_mass(m, h.normal, c); };
    h.offset_lo = bisect_boundary([&](double c) { return mass(c) >= 0.5; }, lo, hi, res);
    h.offset_hi = bisect_boundary([&](double c) { return mass(c) > 0.5; }, lo, hi, res);
    if (h.offset_hi < h.offset_lo) std::swap(h.offset_lo, h.offset_hi);
    h.offset = 0.5 * (h.offset_lo + h.offset_hi);
    return h;
}

WedgeFrame wedge_frame(const Fan& fan, std::size_t j) {
    const double theta = fan.wedge_angle(j);
    WedgeFrame f;
    f.bisector = rotate(fan.directions[j], 0.5 * theta);
    // Oriented so that s -> +inf runs along the asymptotic ray of direction
    // -e_{j+1} and s -> -inf along the one of direction -e_j.
    f.s_axis = -perp(f.bisector);
    return f;
}

CurvePoint curve_point(const Measure& m, const Fan& fan, std::size_t j, double s, double /*tol*/) {
    const double theta = fan.wedge_angle(j);
    if (std::abs(theta - kPi) <= kPiWedgeTol)
        throw Error(errc::parallel_rays, "curve tracing is undefined for a pi wedge");

    const WedgeFrame frame = wedge_frame(fan, j);
    const SupportBounds sb = support_bounds(m);
    const double tau0 = dot(sb.center, frame.bisector);
    const double ds = std::abs(s - dot(sb.center, frame.s_axis));

    // Mass is nonincreasing as the apex advances along the bisector; the
    // initial half-width is enough for the asymptotic ray regime and is
    // doubled if the level is not yet bracketed.
    const double kappa = 1.0 / std::max(std::sin(0.5 * theta), 1e-8);
    double w = (sb.radius + 1.0 + ds) * kappa;

    auto apex_at = [&](double tau) { return frame.s_axis * s + frame.bisector * tau; };
    auto mass_at = [&](double tau) { return wedge_mass(m, wedge_of(fan, j, apex_at(tau))); };

    int expansions = 0;
    while (!(mass_at(tau0 - w) >= 0.5 && mass_at(tau0 + w) <= 0.5)) {
        if (++expansions > 60) throw Error(errc::no_bracket, "mass level 1/2 not bracketed");
        w *= 2.0;
    }

    const double res = 1e-12 * std::max({sb.radius, std::abs(tau0) + w, 1.0});
    const double lo = tau0 - w, hi = tau0 + w;
    double level_lo = bisect_boundary([&](double t) { return mass_at(t) <= 0.5; }, lo, hi, res);
    double level_hi = bisect_boundary([&](double t) { return mass_at(t) < 0.5; }, lo, hi, res);
    if (level_hi < level_lo) std::swap(level_lo, level_hi);

    CurvePoint cp;
    cp.s = s;
    cp.apex = apex_at(0.5 * (level_lo + level_hi));
    cp.mass_check = wedge_mass(m, wedge_of(fan, j, cp.apex));
    return cp;
}

AlphaAngle alpha_angle(const Measure& m, const Fan& fan, std::size_t j, double tol) {
    const double theta = fan.wedge_angle(j);
    const Vec2 e_lo = fan.directions[j];
    const Vec2 e_hi = fan.directions[(j + 1) % fan.size()];
    const double det = cross(e_lo, e_hi);  // == sin(theta) for the normals below
    if (std::abs(theta - kPi) <= kPiWedgeTol || std::abs(det) < 1e-12)
        throw Error(errc::parallel_rays,
                    "alpha angle degenerates to a halfplane for wedge " + std::to_string(j + 1));

    const HalvingLine h_lo = halving_line(m, e_lo, tol);
    const HalvingLine h_hi = halving_line(m, e_hi, tol);

    // Intersection of the two halving lines.
    const Vec2 n1 = h_lo.normal, n2 = h_hi.normal;
    const double o1 = h_lo.offset, o2 = h_hi.offset;
    const double d = cross(n1, n2);
    Vec2 apex{(o1 * n2.y - o2 * n1.y) / d, (o2 * n1.x - o1 * n2.x) / d};

    AlphaAngle a;
    a.wedge = make_wedge(apex, -e_lo, -e_hi);
    a.source_j = j;
    return a;
}

Halfplane alpha_halfplane(const Measure& m, const Fan& fan, std::size_t j, double tol) {
    const double theta = fan.wedge_angle(j);
    if (std::abs(theta - kPi) > 1e-9)
        throw Error(errc::invalid_wedge, "alpha_halfplane applies to pi wedges only");
    const HalvingLine h = halving_line(m, fan.directions[j], tol);
    return Halfplane{h.normal, h.offset};
}

Relation containment_relation(const AlphaAngle& a, const AlphaAngle& b) {
    if (a.source_j != b.source_j)
        throw Error(errc::mixed_angles, "alpha angles belong to different wedges");

    const Wedge& wa = a.wedge;
    const double theta = wa.angle;
    // Test cone: d in T means a is a subset of b (translate of a convex cone
    // nests by cone membership; reflex wedges nest by the negated complement).
    Vec2 t_lo, t_hi;
    if (theta <= kPi) {
        t_lo = wa.dir_lo;
        t_hi = wa.dir_hi;
    } else {
        t_lo = -wa.dir_hi;
        t_hi = -wa.dir_lo;
    }

    const Vec2 d = a.wedge.apex - b.wedge.apex;
    const double scale = std::max({1.0, a.wedge.apex.norm(), b.wedge.apex.norm()});
    if (d.norm() <= 1e-9 * scale) return Relation::shared_ray;

    const Vec2 dh = d / d.norm();
    const double band = 1e-9;
    const double c_lo = cross(t_lo, dh);
    const double c_hi = cross(t_hi, dh);
    if (std::abs(c_lo) <= band || std::abs(c_hi) <= band) return Relation::shared_ray;

    auto strictly_inside = [&](const Vec2& v) {
        return cross(t_lo, v) > band && cross(v, t_hi) > band;
    };
    if (strictly_inside(dh)) return Relation::first_inside;
    if (strictly_inside(-dh)) return Relation::second_inside;
    return Relation::cross;
}

}  // namespace fancut
