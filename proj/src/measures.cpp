#include "fancut/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace fancut {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPiWedgeTol = 1e-12;

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

struct WedgeClip {
    // wedge with angle <= pi as {p.n1 <= c1} with n1 = -perp(dir_lo)
    // and {p.n2 <= c2} with n2 = perp(dir_hi)
    Vec2 n1, n2;
    double c1 = 0.0, c2 = 0.0;
    bool halfplane = false;  // angle == pi: only the first constraint applies
};

WedgeClip wedge_clip(const Wedge& w) {
    WedgeClip c;
    c.n1 = -perp(w.dir_lo);
    c.c1 = dot(w.apex, c.n1);
    c.n2 = perp(w.dir_hi);
    c.c2 = dot(w.apex, c.n2);
    c.halfplane = std::abs(w.angle - kPi) <= kPiWedgeTol;
    return c;
}

double stable_root_low(double A, double B, double C, double disc) {
    double q = -0.5 * (B + std::copysign(std::sqrt(std::max(disc, 0.0)), B));
    double t1 = (A != 0.0) ? q / A : 0.0;
    double t2 = (q != 0.0) ? C / q : t1;
    return std::min(t1, t2);
}

double stable_root_high(double A, double B, double C, double disc) {
    double q = -0.5 * (B + std::copysign(std::sqrt(std::max(disc, 0.0)), B));
    double t1 = (A != 0.0) ? q / A : 0.0;
    double t2 = (q != 0.0) ? C / q : t1;
    return std::max(t1, t2);
}

/// Signed area of disk(0, r) intersected with the triangle (0, a, b).
double disk_triangle_area(Vec2 a, Vec2 b, double r) {
    double cr = cross(a, b);
    if (cr == 0.0) return 0.0;
    double sgn = 1.0;
    if (cr < 0.0) {
        std::swap(a, b);
        sgn = -1.0;
    }
    const double r2 = r * r;
    auto sector = [r2](const Vec2& u, const Vec2& v) {
        return 0.5 * r2 * std::atan2(cross(u, v), dot(u, v));
    };
    const bool a_in = a.norm2() <= r2;
    const bool b_in = b.norm2() <= r2;
    if (a_in && b_in) return sgn * 0.5 * cross(a, b);

    const Vec2 d = b - a;
    const double A = d.norm2();
    const double B = 2.0 * dot(a, d);
    const double C = a.norm2() - r2;
    const double disc = B * B - 4.0 * A * C;

    if (a_in && !b_in) {
        double t = std::clamp(stable_root_high(A, B, C, disc), 0.0, 1.0);
        Vec2 p = a + d * t;
        return sgn * (0.5 * cross(a, p) + sector(p, b));
    }
    if (!a_in && b_in) {
        double t = std::clamp(stable_root_low(A, B, C, disc), 0.0, 1.0);
        Vec2 p = a + d * t;
        return sgn * (sector(a, p) + 0.5 * cross(p, b));
    }
    if (disc <= 0.0) return sgn * sector(a, b);
    double t1 = stable_root_low(A, B, C, disc);
    double t2 = stable_root_high(A, B, C, disc);
    if (t2 <= 0.0 || t1 >= 1.0) return sgn * sector(a, b);
    t1 = std::max(t1, 0.0);
    t2 = std::min(t2, 1.0);
    Vec2 p1 = a + d * t1;
    Vec2 p2 = a + d * t2;
    return sgn * (sector(a, p1) + 0.5 * cross(p1, p2) + sector(p2, b));
}

double disk_poly_area(const Vec2& center, double r, const std::vector<Vec2>& poly) {
    if (poly.size() < 3) return 0.0;
    double area = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Vec2 a = poly[i] - center;
        const Vec2 b = poly[(i + 1) % poly.size()] - center;
        area += disk_triangle_area(a, b, r);
    }
    return std::clamp(area, 0.0, kPi * r * r);
}

double disk_blob_wedge_mass(const DiskBlobMeasure& m, const Wedge& w) {
    const WedgeClip clip = wedge_clip(w);
    double mass = 0.0;
    for (const Blob& b : m.blobs) {
        if (clip.halfplane) {
            double depth = clip.c1 - dot(b.center, clip.n1);  // blob depth inside the wedge side
            if (depth >= b.radius) {
                mass += b.weight;
                continue;
            }
            if (depth <= -b.radius) continue;
            mass += b.weight * disk_halfplane_area(b.center, b.radius, clip.n1, clip.c1) /
                    (kPi * b.radius * b.radius);
            continue;
        }
        double d1 = dot(b.center, clip.n1) - clip.c1;  // > 0 means outside constraint 1
        double d2 = dot(b.center, clip.n2) - clip.c2;
        if (d1 >= b.radius || d2 >= b.radius) continue;
        if (d1 <= -b.radius && d2 <= -b.radius) {
            mass += b.weight;
            continue;
        }
        mass += b.weight * disk_wedge_area(b.center, b.radius, w) / (kPi * b.radius * b.radius);
    }
    return clamp01(mass);
}

double disk_blob_halfplane_mass(const DiskBlobMeasure& m, const Vec2& n, double c) {
    double mass = 0.0;
    for (const Blob& b : m.blobs) {
        double depth = c - dot(b.center, n);
        if (depth >= b.radius) {
            mass += b.weight;
        } else if (depth > -b.radius) {
            mass += b.weight * disk_halfplane_area(b.center, b.radius, n, c) / (kPi * b.radius * b.radius);
        }
    }
    return clamp01(mass);
}

// ---- gaussian ----

constexpr double kSqrtHalfPi = 1.2533141373155002512;  // sqrt(pi/2)
constexpr double kInvSqrt2 = 0.70710678118654752440;

/// Radial integral of the standard normal density along the ray from apex v
/// in direction (cos phi, sin phi), with the polar Jacobian. The squared
/// perpendicular distance comes from the cross product; c2 - b*b cancels
/// catastrophically for far apexes and makes the integrand jagged.
double gaussian_ray_integral(const Vec2& v, double c2, const Vec2& u) {
    const double b = dot(v, u);
    const double cr = cross(v, u);
    const double perp2 = cr * cr;
    double second;
    if (b <= 0.0) {
        second = -b * kSqrtHalfPi * std::exp(-0.5 * perp2) * std::erfc(b * kInvSqrt2);
    } else {
        second = -b * kSqrtHalfPi * std::exp(-0.5 * c2) * erfcx(b * kInvSqrt2);
    }
    return (std::exp(-0.5 * c2) + second) / (2.0 * kPi);
}

struct Quadrature {
    const Vec2& v;
    double c2;
    int max_depth;

    double eval(double phi) const { return gaussian_ray_integral(v, c2, {std::cos(phi), std::sin(phi)}); }

    double adapt(double a, double b, double fa, double fm, double fb, double whole, double tol,
                 int depth) const {
        if (depth > max_depth)
            throw Error(errc::quadrature_not_converged,
                        "angular quadrature exceeded " + std::to_string(max_depth) + " levels");
        double m = 0.5 * (a + b);
        double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
        double flm = eval(lm), frm = eval(rm);
        double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        double err = (left + right - whole) / 15.0;
        // The noise floor keeps spike-at-endpoint integrands from splitting
        // past double precision, where error and tolerance halve in lockstep.
        double noise = 1e-15 * (std::abs(left) + std::abs(right) + std::abs(whole));
        if (std::abs(err) <= std::max(tol, noise) || b - a <= 1e-12)
            return left + right + err;
        return adapt(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
               adapt(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
    }

    double integrate(double a, double b, double tol) const {
        if (b <= a) return 0.0;
        double m = 0.5 * (a + b);
        double fa = eval(a), fm = eval(m), fb = eval(b);
        double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        return adapt(a, b, fa, fm, fb, whole, tol, 0);
    }
};

double gaussian_halfplane_mass(const GaussianMeasure& m, const Vec2& n, double c) {
    return norm_cdf((c - dot(m.mean, n)) / m.sigma);
}

}  // namespace

double erfcx(double z) {
    if (z < 25.0) return std::exp(z * z) * std::erfc(z);
    // Asymptotic series 1/(z sqrt(pi)) * sum (-1)^n (2n-1)!! / (2 z^2)^n.
    const double iz2 = 1.0 / (2.0 * z * z);
    double sum = 1.0, term = 1.0;
    for (int n = 1; n <= 8; ++n) {
        term *= -(2.0 * n - 1.0) * iz2;
        sum += term;
    }
    return sum / (z * std::sqrt(kPi));
}

double norm_cdf(double z) { return 0.5 * std::erfc(-z * kInvSqrt2); }

DiskBlobMeasure make_disk_blob_measure(std::vector<Blob> blobs) {
    if (blobs.empty()) throw Error(errc::invalid_measure, "no blobs");
    double total = 0.0;
    for (std::size_t i = 0; i < blobs.size(); ++i) {
        const Blob& b = blobs[i];
        if (!std::isfinite(b.center.x) || !std::isfinite(b.center.y) || !(b.radius > 0.0) ||
            !(b.weight > 0.0))
            throw Error(errc::invalid_measure, "blob " + std::to_string(i + 1));
        total += b.weight;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw Error(errc::invalid_measure, "blob weights sum to " + std::to_string(total));
    for (std::size_t i = 0; i < blobs.size(); ++i)
        for (std::size_t j = i + 1; j < blobs.size(); ++j)
            if ((blobs[i].center - blobs[j].center).norm() <= blobs[i].radius + blobs[j].radius)
                throw Error(errc::invalid_measure,
                            "blobs " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                " are not disjoint");
    DiskBlobMeasure m;
    m.blobs = std::move(blobs);
    return m;
}

PolygonMeasure make_polygon_measure(std::vector<Vec2> vertices) {
    if (vertices.size() < 3) throw Error(errc::invalid_measure, "polygon needs at least 3 vertices");
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e0 = vertices[(i + 1) % n] - vertices[i];
        const Vec2 e1 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
        double c = cross(e0, e1);
        if (!(c > 1e-12 * e0.norm() * e1.norm()))
            throw Error(errc::invalid_measure,
                        "polygon is not strictly convex counter-clockwise at vertex " +
                            std::to_string((i + 1) % n + 1));
    }
    PolygonMeasure m;
    m.vertices = std::move(vertices);
    m.area = polygon_area(m.vertices);
    if (!(m.area > 0.0)) throw Error(errc::invalid_measure, "polygon area must be positive");
    return m;
}

GaussianMeasure make_gaussian_measure(const Vec2& mean, double sigma, double support_sigmas) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw Error(errc::invalid_measure, "sigma must be > 0");
    if (!(support_sigmas > 0.0)) throw Error(errc::invalid_measure, "support multiplier must be > 0");
    if (!std::isfinite(mean.x) || !std::isfinite(mean.y))
        throw Error(errc::invalid_measure, "non-finite mean");
    return GaussianMeasure{mean, sigma, support_sigmas};
}

SupportBounds support_bounds(const Measure& m) {
    return std::visit(
        [](const auto& mm) -> SupportBounds {
            using T = std::decay_t<decltype(mm)>;
            if constexpr (std::is_same_v<T, DiskBlobMeasure>) {
                double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
                for (const Blob& b : mm.blobs) {
                    xlo = std::min(xlo, b.center.x - b.radius);
                    xhi = std::max(xhi, b.center.x + b.radius);
                    ylo = std::min(ylo, b.center.y - b.radius);
                    yhi = std::max(yhi, b.center.y + b.radius);
                }
                Vec2 c{0.5 * (xlo + xhi), 0.5 * (ylo + yhi)};
                double r = 0.0;
                for (const Blob& b : mm.blobs) r = std::max(r, (b.center - c).norm() + b.radius);
                return {c, r, true};
            } else if constexpr (std::is_same_v<T, PolygonMeasure>) {
                double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
                for (const Vec2& v : mm.vertices) {
                    xlo = std::min(xlo, v.x);
                    xhi = std::max(xhi, v.x);
                    ylo = std::min(ylo, v.y);
                    yhi = std::max(yhi, v.y);
                }
                Vec2 c{0.5 * (xlo + xhi), 0.5 * (ylo + yhi)};
                double r = 0.0;
                for (const Vec2& v : mm.vertices) r = std::max(r, (v - c).norm());
                return {c, r, true};
            } else {
                return {mm.mean, mm.support_sigmas * mm.sigma, false};
            }
        },
        m);
}

SupportBounds joint_support_bounds(const Measure& a, const Measure& b) {
    SupportBounds sa = support_bounds(a);
    SupportBounds sb = support_bounds(b);
    SupportBounds j;
    j.center = (sa.center + sb.center) * 0.5;
    j.radius = std::max((sa.center - j.center).norm() + sa.radius,
                        (sb.center - j.center).norm() + sb.radius);
    j.exact = sa.exact && sb.exact;
    return j;
}

double disk_halfplane_area(const Vec2& center, double r, const Vec2& n, double c) {
    const double d = c - dot(center, n);  // signed distance of the boundary from the center
    if (d >= r) return kPi * r * r;
    if (d <= -r) return 0.0;
    return d * std::sqrt(r * r - d * d) + r * r * std::asin(d / r) + 0.5 * kPi * r * r;
}

double disk_wedge_area(const Vec2& center, double r, const Wedge& w) {
    if (w.angle > kPi + kPiWedgeTol)
        throw Error(errc::invalid_wedge, "disk_wedge_area requires angle <= pi");
    const WedgeClip clip = wedge_clip(w);
    if (clip.halfplane) return disk_halfplane_area(center, r, clip.n1, clip.c1);

    const double h = 2.0 * r;  // bounding square strictly containing the disk
    std::vector<Vec2> poly{{center.x - h, center.y - h},
                           {center.x + h, center.y - h},
                           {center.x + h, center.y + h},
                           {center.x - h, center.y + h}};
    poly = clip_halfplane(poly, clip.n1, clip.c1);
    poly = clip_halfplane(poly, clip.n2, clip.c2);
    if (poly.size() < 3) return 0.0;
    return disk_poly_area(center, r, poly);
}

std::vector<Vec2> clip_halfplane(const std::vector<Vec2>& poly, const Vec2& n, double c) {
    std::vector<Vec2> out;
    const std::size_t m = poly.size();
    if (m == 0) return out;
    out.reserve(m + 2);
    for (std::size_t i = 0; i < m; ++i) {
        const Vec2& p = poly[i];
        const Vec2& q = poly[(i + 1) % m];
        const double dp = dot(p, n) - c;
        const double dq = dot(q, n) - c;
        if (dp <= 0.0) out.push_back(p);
        if ((dp < 0.0 && dq > 0.0) || (dp > 0.0 && dq < 0.0)) {
            double t = dp / (dp - dq);
            out.push_back(p + (q - p) * t);
        }
    }
    return out;
}

double polygon_area(const std::vector<Vec2>& poly) {
    double s = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) s += cross(poly[i], poly[(i + 1) % poly.size()]);
    return 0.5 * s;
}

double polygon_wedge_mass(const PolygonMeasure& m, const Wedge& w) {
    if (w.angle > kPi + kPiWedgeTol)
        throw Error(errc::invalid_wedge, "polygon_wedge_mass requires angle <= pi");
    const WedgeClip clip = wedge_clip(w);
    std::vector<Vec2> p = clip_halfplane(m.vertices, clip.n1, clip.c1);
    if (!clip.halfplane) p = clip_halfplane(p, clip.n2, clip.c2);
    if (p.size() < 3) return 0.0;
    return clamp01(polygon_area(p) / m.area);
}

double gaussian_wedge_mass(const GaussianMeasure& m, const Wedge& w) {
    if (w.angle > kPi + kPiWedgeTol)
        throw Error(errc::invalid_wedge, "gaussian_wedge_mass requires angle <= pi");
    const WedgeClip clip = wedge_clip(w);
    if (clip.halfplane) return clamp01(gaussian_halfplane_mass(m, clip.n1, clip.c1));

    const Vec2 v = (w.apex - m.mean) / m.sigma;
    const double c2 = v.norm2();
    Quadrature q{v, c2, 60};

    const double phi0 = std::atan2(w.dir_lo.y, w.dir_lo.x);
    const double phi1 = phi0 + w.angle;
    // Split at the direction toward the mean: the integrand peaks there.
    double peak = std::atan2(-v.y, -v.x);
    while (peak < phi0) peak += 2.0 * kPi;
    const double tol = 1e-10;
    double mass;
    if (peak > phi0 + 1e-9 && peak < phi1 - 1e-9) {
        mass = q.integrate(phi0, peak, 0.5 * tol) + q.integrate(peak, phi1, 0.5 * tol);
    } else {
        mass = q.integrate(phi0, phi1, tol);
    }
    return clamp01(mass);
}

double wedge_mass(const Measure& m, const Wedge& w) {
    if (w.angle > kPi + kPiWedgeTol) return clamp01(1.0 - wedge_mass(m, complement_wedge(w)));
    return std::visit(
        [&](const auto& mm) -> double {
            using T = std::decay_t<decltype(mm)>;
            if constexpr (std::is_same_v<T, DiskBlobMeasure>) {
                return disk_blob_wedge_mass(mm, w);
            } else if constexpr (std::is_same_v<T, PolygonMeasure>) {
                return polygon_wedge_mass(mm, w);
            } else {
                return gaussian_wedge_mass(mm, w);
            }
        },
        m);
}

double halfplane_mass(const Measure& m, const Vec2& n, double c) {
    return std::visit(
        [&](const auto& mm) -> double {
            using T = std::decay_t<decltype(mm)>;
            if constexpr (std::is_same_v<T, DiskBlobMeasure>) {
                return disk_blob_halfplane_mass(mm, n, c);
            } else if constexpr (std::is_same_v<T, PolygonMeasure>) {
                std::vector<Vec2> p = clip_halfplane(mm.vertices, n, c);
                if (p.size() < 3) return 0.0;
                return clamp01(polygon_area(p) / mm.area);
            } else {
                return gaussian_halfplane_mass(mm, n, c);
            }
        },
        m);
}

}  // namespace fancut
