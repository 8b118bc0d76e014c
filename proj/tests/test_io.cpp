#include <string>

#include "doctest.h"
#include "fancut/problem_io.hpp"
#include "json.hpp"

using namespace fancut;

namespace {

const char* kTwoDisks = R"({
  "version": 1,
  "fan": {"degrees": [90, 210, 330]},
  "measures": [
    {"type": "disk-blobs", "blobs": [{"c": [0, 0], "r": 1.0, "w": 1.0}]},
    {"type": "disk-blobs", "blobs": [{"c": [1.2, 0.4], "r": 1.0, "w": 1.0}]}
  ],
  "options": {"tol": 1e-8}
})";

}  // namespace

TEST_CASE("parse_problem accepts the documented format") {
    Problem p = parse_problem(kTwoDisks);
    CHECK(p.fan.size() == 3);
    CHECK(p.options.tol == 1e-8);
    CHECK(std::holds_alternative<DiskBlobMeasure>(p.m1));

    Problem g = parse_problem(R"({
      "version": 1,
      "fan": {"directions": [[1, 0], [0, 1], [-1, 0], [0, -1]]},
      "measures": [
        {"type": "gaussian", "mean": [0, 0], "sigma": 1},
        {"type": "polygon", "vertices": [[0, 0], [1, 0], [1, 1], [0, 1]]}
      ]
    })");
    CHECK(g.fan.size() == 4);
    CHECK(std::get<GaussianMeasure>(g.m1).support_sigmas == 8.0);
    CHECK(std::get<PolygonMeasure>(g.m2).area == doctest::Approx(1.0));
}

TEST_CASE("parse_problem rejects unknown or malformed fields with a path") {
    auto expect_error = [](const std::string& text, const std::string& needle) {
        try {
            parse_problem(text);
            FAIL_CHECK("expected a parse error containing: " << needle);
        } catch (const Error& e) {
            CHECK(e.code() == errc::parse_error);
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };

    expect_error(R"({"version": 2, "fan": {}, "measures": []})", "version");
    expect_error(R"({"version": 1, "fan": {"degrees": [0, 90]}, "measures": [1, 2], "extra": 0})",
                 "extra");
    expect_error(R"({"version": 1, "fan": {"degrees": [0, 90]}, "measures":
                 [{"type": "gaussian", "mean": [0,0], "sigma": 1, "mu": 3},
                  {"type": "gaussian", "mean": [0,0], "sigma": 1}]})",
                 "mu");
    expect_error(R"({"version": 1, "fan": {"degrees": [0, 270, 90]}, "measures":
                 [{"type": "gaussian", "mean": [0,0], "sigma": 1},
                  {"type": "gaussian", "mean": [0,0], "sigma": 1}]})",
                 "NotCounterClockwise");
    expect_error("{", "parse");
}

TEST_CASE("problem files round trip exactly") {
    Problem p1 = parse_problem(kTwoDisks);
    std::string s1 = serialize_problem(p1);
    Problem p2 = parse_problem(s1);
    std::string s2 = serialize_problem(p2);
    CHECK(s1 == s2);
    REQUIRE(p1.fan.size() == p2.fan.size());
    for (std::size_t i = 0; i < p1.fan.size(); ++i) {
        CHECK(p1.fan.directions[i].x == p2.fan.directions[i].x);
        CHECK(p1.fan.directions[i].y == p2.fan.directions[i].y);
    }
    CHECK(p1.options.tol == p2.options.tol);
}

TEST_CASE("solve reports carry the outcome and echo the problem") {
    Problem p = parse_problem(kTwoDisks);
    SolveOutcome out = solve_equipartition(p.fan, p.m1, p.m2, p.options.tol);
    std::string rep = solve_report_json(p, out, "solve", std::nullopt);

    nlohmann::json j = nlohmann::json::parse(rep);
    CHECK(j["outcome"] == "result");
    CHECK(j["tool"] == kToolVersion);
    CHECK(j.contains("problem"));
    CHECK(!j.contains("timing_ms"));
    CHECK(j["result"]["residuals"][0].get<double>() <= 1e-8);
    CHECK(j["result"]["j"].get<int>() >= 1);

    // reports round-trip losslessly through their serialized form
    CHECK(nlohmann::json::parse(j.dump()) == j);

    // the report is a valid plot input carrying the solution
    PlotInput in = parse_plot_input(rep);
    CHECK(in.solution.has_value());
    CHECK(in.problem.fan.size() == 3);
}

TEST_CASE("verify reports serialize certificates and refutations") {
    CounterexampleConfig cfg = build_fig1_4fan(1.0, 0.005);
    Problem p;
    p.fan = cfg.fan;
    p.m1 = cfg.m1;
    p.m2 = cfg.m2;
    VerifyOutcome out = verify_no_equipartition(cfg, 1.0 / 2000, 1e-9);
    std::string rep = verify_report_json(p, out, "certify", std::nullopt);
    nlohmann::json j = nlohmann::json::parse(rep);
    CHECK(j["outcome"] == "certificate");
    CHECK(j["certificate"]["delta"].get<double>() > 0.0);
    CHECK(j["certificate"]["evaluations"].get<long long>() > 0);
}

TEST_CASE("trace rows are flagged rather than dropped") {
    std::vector<CurvePoint> pts{{-1.0, {0.5, 0.25}, 0.5}, {0.0, {0, 0}, 0}, {1.0, {1, 2}, 0.5}};
    std::vector<bool> ok{true, false, true};
    std::string csv = trace_csv(pts, ok);
    CHECK(csv.find("s,apex_x,apex_y,mass_check\n") == 0);
    CHECK(csv.find("nan") != std::string::npos);
    int lines = 0;
    for (char c : csv)
        if (c == '\n') ++lines;
    CHECK(lines == 4);
}

TEST_CASE("default grid step follows the support scale") {
    Problem p = parse_problem(kTwoDisks);
    double gs = default_grid_step(p);
    SupportBounds joint = joint_support_bounds(p.m1, p.m2);
    CHECK(gs == doctest::Approx(joint.radius / 2000.0));
}
