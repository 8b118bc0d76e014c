#include "fancut/problem_io.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "json.hpp"

namespace fancut {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw Error(errc::parse_error, path + ": " + what);
}

void check_keys(const json& j, const std::string& path, const std::set<std::string>& allowed) {
    if (!j.is_object()) fail(path, "expected an object");
    for (const auto& item : j.items())
        if (!allowed.count(item.key())) fail(path, "unknown field '" + item.key() + "'");
}

double get_number(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

Vec2 get_vec2(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) fail(path, "expected [x, y]");
    return {get_number(j[0], path + "[0]"), get_number(j[1], path + "[1]")};
}

Fan parse_fan(const json& j, const std::string& path) {
    check_keys(j, path, {"directions", "degrees"});
    if (j.contains("directions") == j.contains("degrees"))
        fail(path, "provide exactly one of 'directions' or 'degrees'");
    std::vector<Vec2> dirs;
    if (j.contains("directions")) {
        const json& arr = j["directions"];
        if (!arr.is_array()) fail(path + ".directions", "expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i)
            dirs.push_back(get_vec2(arr[i], path + ".directions[" + std::to_string(i) + "]"));
    } else {
        const json& arr = j["degrees"];
        if (!arr.is_array()) fail(path + ".degrees", "expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            double deg = get_number(arr[i], path + ".degrees[" + std::to_string(i) + "]");
            double rad = deg * std::numbers::pi / 180.0;
            dirs.push_back({std::cos(rad), std::sin(rad)});
        }
    }
    try {
        return fan_from_directions(dirs);
    } catch (const Error& e) {
        fail(path, e.what());
    }
}

Measure parse_measure(const json& j, const std::string& path, double trunc_sigmas) {
    if (!j.is_object() || !j.contains("type")) fail(path, "expected a measure object with 'type'");
    const std::string type = j["type"].is_string() ? j["type"].get<std::string>() : "";
    try {
        if (type == "disk-blobs") {
            check_keys(j, path, {"type", "blobs"});
            if (!j.contains("blobs") || !j["blobs"].is_array()) fail(path, "missing 'blobs' array");
            std::vector<Blob> blobs;
            for (std::size_t i = 0; i < j["blobs"].size(); ++i) {
                const json& bj = j["blobs"][i];
                const std::string bp = path + ".blobs[" + std::to_string(i) + "]";
                check_keys(bj, bp, {"c", "r", "w"});
                if (!bj.contains("c") || !bj.contains("r") || !bj.contains("w"))
                    fail(bp, "blob needs fields c, r, w");
                blobs.push_back({get_vec2(bj["c"], bp + ".c"), get_number(bj["r"], bp + ".r"),
                                 get_number(bj["w"], bp + ".w")});
            }
            return make_disk_blob_measure(std::move(blobs));
        }
        if (type == "polygon") {
            check_keys(j, path, {"type", "vertices"});
            if (!j.contains("vertices") || !j["vertices"].is_array())
                fail(path, "missing 'vertices' array");
            std::vector<Vec2> vs;
            for (std::size_t i = 0; i < j["vertices"].size(); ++i)
                vs.push_back(get_vec2(j["vertices"][i], path + ".vertices[" + std::to_string(i) + "]"));
            return make_polygon_measure(std::move(vs));
        }
        if (type == "gaussian") {
            check_keys(j, path, {"type", "mean", "sigma"});
            if (!j.contains("mean") || !j.contains("sigma")) fail(path, "gaussian needs mean and sigma");
            return make_gaussian_measure(get_vec2(j["mean"], path + ".mean"),
                                         get_number(j["sigma"], path + ".sigma"), trunc_sigmas);
        }
    } catch (const Error& e) {
        if (e.code() == errc::parse_error) throw;
        fail(path, e.what());
    }
    fail(path + ".type", "unknown measure type '" + type + "'");
}

json vec_json(const Vec2& v) { return json::array({v.x, v.y}); }

json measure_json(const Measure& m) {
    return std::visit(
        [](const auto& mm) -> json {
            using T = std::decay_t<decltype(mm)>;
            json j;
            if constexpr (std::is_same_v<T, DiskBlobMeasure>) {
                j["type"] = "disk-blobs";
                json arr = json::array();
                for (const Blob& b : mm.blobs)
                    arr.push_back({{"c", vec_json(b.center)}, {"r", b.radius}, {"w", b.weight}});
                j["blobs"] = arr;
            } else if constexpr (std::is_same_v<T, PolygonMeasure>) {
                j["type"] = "polygon";
                json arr = json::array();
                for (const Vec2& v : mm.vertices) arr.push_back(vec_json(v));
                j["vertices"] = arr;
            } else {
                j["type"] = "gaussian";
                j["mean"] = vec_json(mm.mean);
                j["sigma"] = mm.sigma;
            }
            return j;
        },
        m);
}

json problem_json(const Problem& p) {
    json j;
    j["version"] = 1;
    json dirs = json::array();
    for (const Vec2& d : p.fan.directions) dirs.push_back(vec_json(d));
    j["fan"] = {{"directions", dirs}};
    j["measures"] = json::array({measure_json(p.m1), measure_json(p.m2)});
    json opts;
    opts["tol"] = p.options.tol;
    opts["trunc_sigmas"] = p.options.trunc_sigmas;
    if (p.options.grid_step) opts["grid_step"] = *p.options.grid_step;
    j["options"] = opts;
    return j;
}

Problem problem_from_json(const json& j) {
    check_keys(j, "$", {"version", "fan", "measures", "options"});
    if (!j.contains("version") || !j["version"].is_number_integer() || j["version"].get<int>() != 1)
        fail("$.version", "expected 1");
    if (!j.contains("fan")) fail("$", "missing 'fan'");
    if (!j.contains("measures") || !j["measures"].is_array() || j["measures"].size() != 2)
        fail("$.measures", "expected exactly two measures");

    Problem p;
    if (j.contains("options")) {
        const json& o = j["options"];
        check_keys(o, "$.options", {"tol", "grid_step", "trunc_sigmas"});
        if (o.contains("tol")) p.options.tol = get_number(o["tol"], "$.options.tol");
        if (o.contains("grid_step"))
            p.options.grid_step = get_number(o["grid_step"], "$.options.grid_step");
        if (o.contains("trunc_sigmas"))
            p.options.trunc_sigmas = get_number(o["trunc_sigmas"], "$.options.trunc_sigmas");
        if (!(p.options.tol > 0.0)) fail("$.options.tol", "must be positive");
    }
    p.fan = parse_fan(j["fan"], "$.fan");
    p.m1 = parse_measure(j["measures"][0], "$.measures[0]", p.options.trunc_sigmas);
    p.m2 = parse_measure(j["measures"][1], "$.measures[1]", p.options.trunc_sigmas);
    return p;
}

json parity_json(const ParityReport& rep) {
    json j;
    j["fan_class"] = fan_class_name(rep.fan_class);
    j["alternating"] = rep.alternating;
    json rels = json::array();
    for (Relation r : rep.relations) rels.push_back(relation_name(r));
    j["relations"] = rels;
    json cands = json::array();
    for (std::size_t c : rep.candidates) cands.push_back(c + 1);
    j["candidates"] = cands;
    return j;
}

json report_shell(const Problem& p, const std::string& command, std::optional<double> timing_ms) {
    json j;
    j["tool"] = kToolVersion;
    j["command"] = command;
    j["problem"] = problem_json(p);
    if (timing_ms) j["timing_ms"] = *timing_ms;
    return j;
}

}  // namespace

Problem parse_problem(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw Error(errc::parse_error, e.what());
    }
    return problem_from_json(j);
}

std::string serialize_problem(const Problem& p) { return problem_json(p).dump(2) + "\n"; }

double default_grid_step(const Problem& p) {
    const SupportBounds joint = joint_support_bounds(p.m1, p.m2);
    return std::max(joint.radius, 1e-9) / 2000.0;
}

std::string solve_report_json(const Problem& p, const SolveOutcome& outcome,
                              const std::string& command, std::optional<double> timing_ms) {
    json j = report_shell(p, command, timing_ms);
    if (const auto* res = std::get_if<EquipartitionResult>(&outcome)) {
        j["outcome"] = "result";
        json r;
        r["j"] = res->j + 1;
        r["t"] = vec_json(res->t);
        r["residuals"] = json::array({res->residual1, res->residual2});
        r["method"] = solve_method_name(res->method);
        r["truncated"] = res->truncated;
        j["result"] = r;
    } else {
        const auto& diag = std::get<FailureDiagnostic>(outcome);
        j["outcome"] = "diagnostic";
        json d = parity_json(diag.parity);
        d["message"] = diag.message;
        j["diagnostic"] = d;
    }
    return j.dump(2) + "\n";
}

std::string verify_report_json(const Problem& p, const VerifyOutcome& outcome,
                               const std::string& command, std::optional<double> timing_ms) {
    json j = report_shell(p, command, timing_ms);
    if (const auto* cert = std::get_if<Certificate>(&outcome)) {
        j["outcome"] = "certificate";
        json c;
        c["delta"] = cert->delta;
        c["grid_step"] = cert->grid_step;
        c["lipschitz"] = cert->lipschitz;
        c["evaluations"] = cert->evaluations;
        c["region"] = {{"center", vec_json(cert->region_center)}, {"radius", cert->region_radius}};
        c["region_bounded"] = cert->region_bounded;
        c["per_wedge_delta"] = cert->per_wedge_delta;
        json cases = json::array();
        for (const CaseBound& cb : cert->boundary_cases)
            cases.push_back({{"j", cb.j + 1}, {"kind", cb.kind}, {"bound", cb.bound}, {"note", cb.note}});
        c["boundary_cases"] = cases;
        j["certificate"] = c;
    } else {
        const auto& ref = std::get<Refutation>(outcome);
        j["outcome"] = "refutation";
        j["refutation"] = {{"j", ref.j + 1}, {"t", vec_json(ref.t)}, {"deviation", ref.deviation}};
    }
    return j.dump(2) + "\n";
}

std::string hypothesis_report_json(const Problem& p, const HalvingHypothesisReport& rep,
                                   const std::string& command, std::optional<double> timing_ms) {
    json j = report_shell(p, command, timing_ms);
    j["outcome"] = "hypothesis";
    json h;
    h["holds"] = rep.holds;
    h["min_gap"] = rep.min_gap;
    if (rep.violating_j) h["violating_j"] = *rep.violating_j + 1;
    json gaps = json::array();
    for (const DirectionGap& g : rep.gaps)
        gaps.push_back({{"j", g.j + 1},
                        {"gap", g.gap},
                        {"offsets1", json::array({g.line1.offset_lo, g.line1.offset_hi})},
                        {"offsets2", json::array({g.line2.offset_lo, g.line2.offset_hi})}});
    h["gaps"] = gaps;
    j["hypothesis"] = h;
    return j.dump(2) + "\n";
}

std::string trace_csv(const std::vector<CurvePoint>& points, const std::vector<bool>& bracketed) {
    std::ostringstream out;
    out << "s,apex_x,apex_y,mass_check\n";
    char line[160];
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i < bracketed.size() && !bracketed[i]) {
            std::snprintf(line, sizeof line, "%.17g,nan,nan,nan\n", points[i].s);
        } else {
            std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g\n", points[i].s,
                          points[i].apex.x, points[i].apex.y, points[i].mass_check);
        }
        out << line;
    }
    return out.str();
}

PlotInput parse_plot_input(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw Error(errc::parse_error, e.what());
    }
    if (!j.is_object()) throw Error(errc::parse_error, "$: expected an object");

    PlotInput in;
    if (j.contains("outcome")) {
        if (!j.contains("problem")) fail("$", "report carries no problem echo");
        in.problem = problem_from_json(j["problem"]);
        if (j["outcome"] == "result" && j.contains("result")) {
            const json& r = j["result"];
            EquipartitionResult res;
            res.j = r.at("j").get<std::size_t>() - 1;
            res.t = get_vec2(r.at("t"), "$.result.t");
            res.residual1 = r.at("residuals")[0].get<double>();
            res.residual2 = r.at("residuals")[1].get<double>();
            in.solution = res;
        }
        return in;
    }
    in.problem = problem_from_json(j);
    return in;
}

}  // namespace fancut
