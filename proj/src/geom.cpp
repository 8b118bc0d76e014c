#include "fancut/geom.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace fancut {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAngleSumTol = 1e-9;
}  // namespace

const char* errc_name(errc c) {
    switch (c) {
        case errc::zero_vector: return "ZeroVector";
        case errc::not_counter_clockwise: return "NotCounterClockwise";
        case errc::angle_sum_mismatch: return "AngleSumMismatch";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::invalid_wedge: return "InvalidWedge";
        case errc::invalid_measure: return "InvalidMeasure";
        case errc::quadrature_not_converged: return "QuadratureNotConverged";
        case errc::no_bracket: return "NoBracket";
        case errc::parallel_rays: return "ParallelRays";
        case errc::mixed_angles: return "MixedAngles";
        case errc::blob_radius_too_large: return "BlobRadiusTooLarge";
        case errc::has_opposite_rays: return "HasOppositeRays";
        case errc::grid_too_coarse: return "GridTooCoarse";
        case errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

Vec2 normalized(const Vec2& v) {
    double n = v.norm();
    if (!(n > 0.0) || !std::isfinite(n))
        throw Error(errc::zero_vector, "cannot normalize zero or non-finite vector");
    if (std::abs(n - 1.0) <= 1e-15) return v;  // keeps normalization idempotent
    return v / n;
}

double ccw_angle(const Vec2& u, const Vec2& v) {
    double a = std::atan2(cross(u, v), dot(u, v));
    if (a < 0.0) a += kTwoPi;
    return a;
}

Vec2 rotate(const Vec2& v, double angle) {
    double c = std::cos(angle), s = std::sin(angle);
    return {v.x * c - v.y * s, v.x * s + v.y * c};
}

double Fan::wedge_angle(std::size_t j) const {
    if (j >= directions.size())
        throw Error(errc::index_out_of_range, "wedge index " + std::to_string(j));
    const Vec2& a = directions[j];
    const Vec2& b = directions[(j + 1) % directions.size()];
    return ccw_angle(a, b);
}

Fan fan_from_directions(const std::vector<Vec2>& dirs) {
    if (dirs.size() < 2)
        throw Error(errc::not_counter_clockwise, "a fan needs at least 2 rays");

    Fan fan;
    fan.directions.reserve(dirs.size());
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        if (!std::isfinite(dirs[i].x) || !std::isfinite(dirs[i].y) || dirs[i].norm2() == 0.0)
            throw Error(errc::zero_vector, "ray " + std::to_string(i + 1));
        fan.directions.push_back(normalized(dirs[i]));
    }

    // Relative polar angles must be strictly increasing over one turn.
    double prev = 0.0;
    for (std::size_t i = 1; i < fan.directions.size(); ++i) {
        double a = ccw_angle(fan.directions[0], fan.directions[i]);
        if (!(a > prev))
            throw Error(errc::not_counter_clockwise,
                        "ray " + std::to_string(i + 1) + " breaks the counter-clockwise order");
        prev = a;
    }

    double sum = 0.0;
    for (std::size_t i = 0; i < fan.directions.size(); ++i) sum += fan.wedge_angle(i);
    if (std::abs(sum - kTwoPi) > kAngleSumTol)
        throw Error(errc::angle_sum_mismatch,
                    "wedge angles sum to " + std::to_string(sum) + " instead of 2*pi");
    return fan;
}

Wedge make_wedge(const Vec2& apex, const Vec2& dir_lo, const Vec2& dir_hi) {
    Wedge w;
    w.apex = apex;
    w.dir_lo = normalized(dir_lo);
    w.dir_hi = normalized(dir_hi);
    w.angle = ccw_angle(w.dir_lo, w.dir_hi);
    if (!(w.angle > 0.0) || !(w.angle < kTwoPi))
        throw Error(errc::invalid_wedge, "wedge angle must lie strictly in (0, 2*pi)");
    return w;
}

Wedge wedge_of(const Fan& fan, std::size_t j, const Vec2& t) {
    if (j >= fan.size())
        throw Error(errc::index_out_of_range,
                    "wedge index " + std::to_string(j) + " for a " + std::to_string(fan.size()) + "-fan");
    return make_wedge(t, fan.directions[j], fan.directions[(j + 1) % fan.size()]);
}

Wedge opposite_wedge(const Wedge& w) {
    Wedge r;
    r.apex = w.apex;
    r.dir_lo = -w.dir_lo;
    r.dir_hi = -w.dir_hi;
    r.angle = w.angle;
    return r;
}

Wedge complement_wedge(const Wedge& w) {
    Wedge r;
    r.apex = w.apex;
    r.dir_lo = w.dir_hi;
    r.dir_hi = w.dir_lo;
    r.angle = kTwoPi - w.angle;
    return r;
}

bool point_in_wedge(const Wedge& w, const Vec2& p) {
    Vec2 v = p - w.apex;
    if (w.angle <= std::numbers::pi) {
        return cross(w.dir_lo, v) >= 0.0 && cross(w.dir_hi, v) <= 0.0;
    }
    // Complement of the open convex wedge from dir_hi to dir_lo.
    bool in_open_complement = cross(w.dir_hi, v) > 0.0 && cross(w.dir_lo, v) < 0.0;
    return !in_open_complement;
}

bool point_in_halfplane(const Halfplane& h, const Vec2& p) {
    return dot(p, h.normal) <= h.offset;
}

}  // namespace fancut
