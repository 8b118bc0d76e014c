#include "fancut/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace fancut {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPiWedgeTol = 1e-12;

bool is_containment(Relation r) {
    return r == Relation::first_inside || r == Relation::second_inside;
}

struct Residuals {
    double r1, r2;
    bool ok(double tol) const { return r1 <= tol && r2 <= tol; }
};

Residuals residuals_at(const Fan& fan, std::size_t j, const Vec2& t, const Measure& m1,
                       const Measure& m2) {
    const Wedge w = wedge_of(fan, j, t);
    return {std::abs(wedge_mass(m1, w) - 0.5), std::abs(wedge_mass(m2, w) - 0.5)};
}

/// Walk outward along a shared halving line until both wedge masses settle
/// at 1/2 (they converge monotonically on the asymptotic ray).
std::optional<EquipartitionResult> walk_shared_ray(const Fan& fan, std::size_t j,
                                                   const Measure& m1, const Measure& m2,
                                                   const Vec2& ray_dir, const Vec2& normal,
                                                   double offset, const SupportBounds& joint,
                                                   double tol) {
    const Vec2 q0 = joint.center + normal * (offset - dot(joint.center, normal));
    double lambda = joint.radius + 1.0;
    for (int step = 0; step < 60; ++step) {
        const Vec2 t = q0 + ray_dir * lambda;
        const Residuals r = residuals_at(fan, j, t, m1, m2);
        if (r.ok(0.9 * tol)) {
            EquipartitionResult res;
            res.j = j;
            res.t = t;
            res.residual1 = r.r1;
            res.residual2 = r.r2;
            res.method = SolveMethod::shared_ray;
            return res;
        }
        lambda *= 2.0;
    }
    return std::nullopt;
}

}  // namespace

const char* fan_class_name(FanClass c) {
    switch (c) {
        case FanClass::odd: return "ODD";
        case FanClass::symmetric_even: return "SYMMETRIC_EVEN";
        case FanClass::opposite_rays_even: return "OPPOSITE_RAYS_EVEN";
        case FanClass::other: return "OTHER";
    }
    return "?";
}

const char* solve_method_name(SolveMethod m) {
    switch (m) {
        case SolveMethod::curve_intersection: return "CURVE_INTERSECTION";
        case SolveMethod::shared_ray: return "SHARED_RAY";
        case SolveMethod::halfplane_direct: return "HALFPLANE_DIRECT";
    }
    return "?";
}

FanClass classify_fan(const Fan& fan) {
    const std::size_t k = fan.size();
    if (k % 2 == 1) return FanClass::odd;

    auto opposite_index = [&](std::size_t a) -> std::optional<std::size_t> {
        for (std::size_t b = 0; b < k; ++b) {
            if (b == a) continue;
            if ((fan.directions[a] + fan.directions[b]).norm() <= 1e-9) return b;
        }
        return std::nullopt;
    };

    bool closed_under_negation = true;
    for (std::size_t a = 0; a < k; ++a)
        if (!opposite_index(a)) {
            closed_under_negation = false;
            break;
        }
    if (closed_under_negation && (k / 2) % 2 == 0) return FanClass::symmetric_even;

    for (std::size_t a = 0; a < k; ++a) {
        auto b = opposite_index(a);
        if (!b || *b < a) continue;
        const std::size_t side = *b - a;  // angles between ray a and ray b
        if (side % 2 == 0 || (k - side) % 2 == 0) return FanClass::opposite_rays_even;
    }
    return FanClass::other;
}

ParityReport parity_report(const Fan& fan, const Measure& m1, const Measure& m2, double tol) {
    const std::size_t k = fan.size();
    const SupportBounds joint = joint_support_bounds(m1, m2);
    const double band = 1e-9 * std::max(1.0, joint.radius);

    ParityReport rep;
    rep.relations.reserve(k);
    rep.fan_class = classify_fan(fan);

    for (std::size_t j = 0; j < k; ++j) {
        const double theta = fan.wedge_angle(j);
        Relation rel;
        if (std::abs(theta - kPi) <= kPiWedgeTol) {
            // Alpha angles are the halfplanes {p.n <= offset}; compare offsets.
            const HalvingLine h1 = halving_line(m1, fan.directions[j], tol);
            const HalvingLine h2 = halving_line(m2, fan.directions[j], tol);
            const bool overlap =
                std::max(h1.offset_lo, h2.offset_lo) <= std::min(h1.offset_hi, h2.offset_hi) + band;
            if (overlap)
                rel = Relation::shared_ray;
            else
                rel = h1.offset < h2.offset ? Relation::first_inside : Relation::second_inside;
        } else {
            const AlphaAngle a1 = alpha_angle(m1, fan, j, tol);
            const AlphaAngle a2 = alpha_angle(m2, fan, j, tol);
            rel = containment_relation(a1, a2);
        }
        rep.relations.push_back(rel);
        if (rel == Relation::cross || rel == Relation::shared_ray) rep.candidates.push_back(j);
    }

    for (std::size_t j = 0; j < k; ++j) {
        const Relation r0 = rep.relations[j];
        const Relation r1 = rep.relations[(j + 1) % k];
        if (is_containment(r0) && is_containment(r1) && r0 == r1) {
            rep.alternating = false;
            break;
        }
    }
    return rep;
}

SolveOutcome solve_equipartition(const Fan& fan, const Measure& m1, const Measure& m2, double tol) {
    const std::size_t k = fan.size();
    const ParityReport rep = parity_report(fan, m1, m2, tol);
    const SupportBounds joint = joint_support_bounds(m1, m2);
    const double band = 2e-9 * std::max(1.0, joint.radius);

    std::vector<std::size_t> candidates = rep.candidates;
    if (candidates.empty()) {
        candidates.resize(k);
        for (std::size_t j = 0; j < k; ++j) candidates[j] = j;
    }

    auto finish = [&](EquipartitionResult res) {
        res.truncated = !joint.exact;
        return res;
    };

    for (std::size_t j : candidates) {
        const double theta = fan.wedge_angle(j);

        if (std::abs(theta - kPi) <= kPiWedgeTol) {
            const HalvingLine h1 = halving_line(m1, fan.directions[j], tol);
            const HalvingLine h2 = halving_line(m2, fan.directions[j], tol);
            const double lo = std::max(h1.offset_lo, h2.offset_lo);
            const double hi = std::min(h1.offset_hi, h2.offset_hi);
            if (lo > hi + band) continue;
            const double c = 0.5 * (lo + std::max(lo, hi));
            const Vec2 t = h1.normal * c;
            const Residuals r = residuals_at(fan, j, t, m1, m2);
            if (r.ok(tol)) {
                EquipartitionResult res;
                res.j = j;
                res.t = t;
                res.residual1 = r.r1;
                res.residual2 = r.r2;
                res.method = SolveMethod::halfplane_direct;
                return finish(res);
            }
            continue;
        }

        if (rep.relations[j] == Relation::shared_ray) {
            // Prefer whichever boundary line actually coincides.
            struct LineCand {
                double mismatch;
                Vec2 ray_dir;
                Vec2 normal;
                double offset;
            };
            std::vector<LineCand> lines;
            for (const Vec2 e : {fan.directions[j], fan.directions[(j + 1) % k]}) {
                const HalvingLine h1 = halving_line(m1, e, tol);
                const HalvingLine h2 = halving_line(m2, e, tol);
                lines.push_back({std::abs(h1.offset - h2.offset), -e, h1.normal,
                                 0.5 * (h1.offset + h2.offset)});
            }
            std::sort(lines.begin(), lines.end(),
                      [](const LineCand& a, const LineCand& b) { return a.mismatch < b.mismatch; });
            for (const LineCand& lc : lines) {
                auto res = walk_shared_ray(fan, j, m1, m2, lc.ray_dir, lc.normal, lc.offset, joint, tol);
                if (res) return finish(*res);
            }
        }

        // Curve intersection: trace the first measure's curve, watch the
        // second measure's mass for a sign change.
        const WedgeFrame frame = wedge_frame(fan, j);
        const double s_center = dot(joint.center, frame.s_axis);
        const double half_span = (2.0 * joint.radius + 1.0) / std::max(std::abs(std::sin(theta)), 0.02) +
                                 joint.radius + 1.0;

        auto g = [&](double s, Vec2* apex_out) {
            const CurvePoint cp = curve_point(m1, fan, j, s, tol);
            if (apex_out) *apex_out = cp.apex;
            return wedge_mass(m2, wedge_of(fan, j, cp.apex)) - 0.5;
        };

        std::optional<EquipartitionResult> found;
        for (int npts : {9, 65, 513, 2049}) {
            std::vector<double> ss(npts), gs(npts);
            bool have_bracket = false;
            double blo = 0.0, bhi = 0.0, glo = 0.0;
            for (int i = 0; i < npts && !found; ++i) {
                ss[i] = s_center + half_span * (2.0 * i / (npts - 1) - 1.0);
                Vec2 apex;
                gs[i] = g(ss[i], &apex);
                if (std::abs(gs[i]) <= tol) {
                    const Residuals r = residuals_at(fan, j, apex, m1, m2);
                    if (r.ok(tol)) {
                        EquipartitionResult res;
                        res.j = j;
                        res.t = apex;
                        res.residual1 = r.r1;
                        res.residual2 = r.r2;
                        res.method = SolveMethod::curve_intersection;
                        found = res;
                    }
                }
                if (!have_bracket && i > 0 && gs[i - 1] * gs[i] < 0.0) {
                    have_bracket = true;
                    blo = ss[i - 1];
                    bhi = ss[i];
                    glo = gs[i - 1];
                }
            }
            if (!found && have_bracket) {
                for (int it = 0; it < 200 && !found; ++it) {
                    const double mid = 0.5 * (blo + bhi);
                    Vec2 apex;
                    const double gm = g(mid, &apex);
                    if (std::abs(gm) <= tol) {
                        const Residuals r = residuals_at(fan, j, apex, m1, m2);
                        if (r.ok(tol)) {
                            EquipartitionResult res;
                            res.j = j;
                            res.t = apex;
                            res.residual1 = r.r1;
                            res.residual2 = r.r2;
                            res.method = SolveMethod::curve_intersection;
                            found = res;
                            break;
                        }
                    }
                    if ((glo < 0.0) == (gm < 0.0))
                        blo = mid;
                    else
                        bhi = mid;
                    if (bhi - blo <= 1e-15 * std::max(1.0, std::abs(blo))) break;
                }
            }
            if (found) break;
        }
        if (found) return finish(*found);
    }

    FailureDiagnostic diag;
    diag.parity = rep;
    diag.message = "no translate of any candidate angle halves both measures at tolerance";
    return diag;
}

HalvingHypothesisReport check_halving_line_hypothesis(const Fan& fan, const Measure& m1, const Measure& m2,
                                         double tol) {
    HalvingHypothesisReport rep;
    rep.holds = true;
    rep.min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < fan.size(); ++j) {
        DirectionGap dg;
        dg.j = j;
        dg.line1 = halving_line(m1, fan.directions[j], tol);
        dg.line2 = halving_line(m2, fan.directions[j], tol);
        dg.gap = std::max(0.0, std::max(dg.line1.offset_lo, dg.line2.offset_lo) -
                                   std::min(dg.line1.offset_hi, dg.line2.offset_hi));
        if (dg.gap < rep.min_gap) rep.min_gap = dg.gap;
        if (dg.gap <= tol && !rep.violating_j) {
            rep.holds = false;
            rep.violating_j = j;
        }
        rep.gaps.push_back(dg);
    }
    if (!rep.gaps.empty() && rep.min_gap <= tol) rep.holds = false;
    return rep;
}

}  // namespace fancut
