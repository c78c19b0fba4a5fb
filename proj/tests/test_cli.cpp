#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "projtv/report.hpp"

using namespace projtv;
using nlohmann::json;

namespace {

namespace fs = std::filesystem;

fs::path temp_dir() {
    static fs::path dir = [] {
        fs::path p = fs::temp_directory_path() / "projtv_cli_tests";
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

std::string write_temp(const std::string& name, const json& doc) {
    const fs::path p = temp_dir() / name;
    std::ofstream out(p);
    out << doc.dump(2);
    return p.string();
}

int run_binary(const std::string& args) {
    const std::string cmd = std::string(PROJTV_BIN) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

json square_instance() {
    json doc;
    doc["d"] = 2;
    doc["points"] = json::array({json::array({1, 1}), json::array({-1, 1}),
                                 json::array({1, -1}), json::array({-1, -1})});
    doc["V"] = json::array({json::array({1, 0, 0}), json::array({0, 1, 0})});
    doc["W"] = json::array({json::array({0, 0, 1})});
    return doc;
}

json strip_timing(json j) {
    j.erase("timing_ms");
    return j;
}

}  // namespace

TEST_CASE("parse_config accepts affine, homogeneous and rational-string data") {
    json doc;
    doc["d"] = 2;
    doc["points"] = json::array({json::array({1, 2}),                 // affine
                                 json::array({"2/3", 1}),             // affine with rational
                                 json::array({0, 0, 1})});            // homogeneous
    const ParsedInput in = parse_config(doc);
    REQUIRE(in.x.has_value());
    CHECK(in.x->points[0] == make_point({Rat(1), Rat(2), Rat(1)}));
    CHECK(in.x->points[1] == make_point({Rat(2), Rat(3), Rat(3)}));
    CHECK(in.x->points[2] == make_point({Rat(0), Rat(0), Rat(1)}));
}

TEST_CASE("parse_config diagnostics carry the field path") {
    json doc;
    doc["d"] = 2;
    doc["points"] = json::array({json::array({1, 2, 3, 4})});
    CHECK_THROWS_WITH_AS(parse_config(doc), doctest::Contains("points[0]"),
                         std::invalid_argument);

    json bad_rat;
    bad_rat["d"] = 2;
    bad_rat["points"] = json::array({json::array({"1/x", 2})});
    CHECK_THROWS_WITH_AS(parse_config(bad_rat), doctest::Contains("points[0][0]"),
                         std::invalid_argument);

    json zero_sub = square_instance();
    zero_sub["V"] = json::array({json::array({0, 0, 0})});
    CHECK_THROWS_WITH_AS(parse_config(zero_sub), doctest::Contains("rank-0"),
                         std::invalid_argument);

    json dep = square_instance();
    dep["V"] = json::array({json::array({1, 0, 0}), json::array({2, 0, 0})});
    const ParsedInput in = parse_config(dep);
    REQUIRE(in.warnings.size() == 1);
    CHECK(in.warnings[0].find("dependent") != std::string::npos);
    CHECK(in.V->rank() == 1);
}

TEST_CASE("config serialization round-trips canonical forms") {
    const PointConfig x = make_config(
        2,
        {make_point({Rat(2), Rat(-4), Rat(6)}), make_point({Rat(0), Rat(1), Rat(0)})},
        std::vector<std::string>{"a", "b"});
    const PointConfig back = config_from_json(config_to_json(x));
    CHECK(back.d == x.d);
    CHECK(back.points == x.points);
    CHECK(back.colors == x.colors);

    const LinSubspace s = canonicalize({{Rat(1), Rat(2), Rat(3)}, {Rat(0), Rat(1), Rat(1)}}, 3);
    CHECK(subspace_from_json(subspace_to_json(s), 3) == s);
}

TEST_CASE("run_job verify cpt on the square") {
    JobSpec job;
    job.command = "verify";
    job.theorem = "cpt";
    job.r = 2;
    job.input_path = write_temp("square.json", square_instance());
    const RunResult res = run_job(job);
    CHECK(res.exit_code == 0);
    CHECK(res.report["verdict"] == "pass");
    CHECK(res.report["certificate"]["min_count"] == 2);
    CHECK(res.report["input_digest"].get<std::string>().substr(0, 8) == "fnv1a64:");

    // r = 3 must fail with exit code 1.
    job.r = 3;
    const RunResult res3 = run_job(job);
    CHECK(res3.exit_code == 1);
    CHECK(res3.report["verdict"] == "fail");
}

TEST_CASE("run_job certify flag reports the reduced class") {
    JobSpec job;
    job.command = "certify";
    job.theorem = "flag";
    job.d = 2;
    job.v = 1;
    job.w = 1;
    job.m = 2;
    const RunResult res = run_job(job);
    CHECK(res.exit_code == 0);
    CHECK(res.report["gates"][0]["reduced_class"] == "e3");
    CHECK(res.report["gates"][0]["value"] == true);
}

TEST_CASE("run_job search tver warns about off-size inputs and still searches") {
    json doc = square_instance();
    doc.erase("W");
    doc["points"].push_back(json::array({0, 2}));  // n = 5, tight size for r=2 is 4
    JobSpec job;
    job.command = "search";
    job.theorem = "tver";
    job.r = 2;
    job.input_path = write_temp("off_size.json", doc);
    const RunResult res = run_job(job);
    bool warned = false;
    for (const auto& w : res.report["warnings"])
        if (w.get<std::string>().find("differs from (D+1)(r-1)+1") != std::string::npos)
            warned = true;
    CHECK(warned);
    CHECK(res.exit_code == 0);  // a 5-point planar set still has a Radon pair
}

TEST_CASE("reports are byte-identical for a fixed seed, modulo timing") {
    json doc = square_instance();
    doc.erase("W");
    JobSpec job;
    job.command = "search";
    job.theorem = "cpt";
    job.r = 2;
    job.search.seed = 11;
    job.input_path = write_temp("seeded.json", doc);
    const RunResult a = run_job(job);
    const RunResult b = run_job(job);
    CHECK(strip_timing(a.report) == strip_timing(b.report));
    CHECK(a.report["seed"] == 11);
}

TEST_CASE("recheck re-validates pass reports and catches tampering") {
    JobSpec job;
    job.command = "verify";
    job.theorem = "cpt";
    job.r = 2;
    job.input_path = write_temp("square2.json", square_instance());
    const RunResult res = run_job(job);
    REQUIRE(res.exit_code == 0);

    const RecheckResult ok = recheck_report(res.report);
    CHECK(ok.ok);

    // Tampered verdict: claim a count that the instance does not support.
    json forged = res.report;
    forged["certificate"]["min_count"] = 3;
    CHECK_FALSE(recheck_report(forged).ok);

    json flipped = res.report;
    std::string sigma = flipped["certificate"]["sigma"].get<std::string>();
    sigma[0] = sigma[0] == '+' ? '-' : '+';
    flipped["certificate"]["sigma"] = sigma;
    CHECK_FALSE(recheck_report(flipped).ok);

    json moved = res.report;
    moved["instance"]["W"] = json::array({json::array({1, 0, 0})});
    CHECK_FALSE(recheck_report(moved).ok);
}

TEST_CASE("oracle radon report rechecks via the hull test") {
    json doc;
    doc["d"] = 2;
    doc["points"] = json::array({json::array({1, 1}), json::array({-1, -1}),
                                 json::array({1, -1}), json::array({-1, 1})});
    JobSpec job;
    job.command = "oracle";
    job.theorem = "tver";
    job.input_path = write_temp("radon.json", doc);
    const RunResult res = run_job(job);
    CHECK(res.exit_code == 0);
    CHECK(res.report["instance"]["common_point"] == json::array({"0", "0"}));
    CHECK(recheck_report(res.report).ok);
}

TEST_CASE("oracle cpt classical and dual") {
    json pts;
    pts["d"] = 1;
    pts["points"] = json::array({json::array({0}), json::array({1}), json::array({2})});
    JobSpec job;
    job.command = "oracle";
    job.theorem = "cpt";
    job.input_path = write_temp("median.json", pts);
    const RunResult res = run_job(job);
    CHECK(res.exit_code == 0);
    CHECK(res.report["instance"]["center_point"] == json::array({"1"}));
    CHECK(res.report["instance"]["depth"] == 2);
    CHECK(recheck_report(res.report).ok);

    json dual;
    dual["d"] = 2;
    dual["hyperplanes"] = json::array();
    dual["hyperplanes"].push_back({{"normal", json::array({1, 0})}, {"offset", 0}});
    dual["hyperplanes"].push_back({{"normal", json::array({0, 1})}, {"offset", 0}});
    dual["hyperplanes"].push_back({{"normal", json::array({1, 1})}, {"offset", 2}});
    job.input_path = write_temp("dual.json", dual);
    const RunResult dres = run_job(job);
    CHECK(dres.exit_code == 0);
    CHECK(dres.report["instance"]["min_crossings"].get<int>() >= 1);
    CHECK(recheck_report(dres.report).ok);
}

TEST_CASE("demo-measure produces a re-checkable discrete certificate") {
    JobSpec job;
    job.command = "demo-measure";
    job.theorem = "cpt";
    job.d = 2;
    job.v = 1;
    job.demo_samples = 21;
    job.search.seed = 3;
    const RunResult res = run_job(job);
    CHECK(res.report.contains("measure"));
    CHECK(res.report["demo"] == true);
    if (res.exit_code == 0) CHECK(recheck_report(res.report).ok);
}

TEST_CASE("plot renders an SVG for instances and reports") {
    json doc = square_instance();
    JobSpec job;
    job.command = "plot";
    job.theorem = "cpt";
    job.input_path = write_temp("plotme.json", doc);
    job.plot_path = (temp_dir() / "out.svg").string();
    const RunResult res = run_job(job);
    CHECK(res.exit_code == 0);
    std::ifstream svg(job.plot_path);
    std::string content((std::istreambuf_iterator<char>(svg)), std::istreambuf_iterator<char>());
    CHECK(content.find("<svg") != std::string::npos);
    CHECK(content.find("circle") != std::string::npos);
}

TEST_CASE("binary exit codes honor the contract") {
    const std::string square = write_temp("bin_square.json", square_instance());
    CHECK(run_binary("verify --theorem cpt --r 2 --input " + square) == 0);
    CHECK(run_binary("verify --theorem cpt --r 3 --input " + square) == 1);
    CHECK(run_binary("verify --theorem cpt --r 2") == 2);  // no input
    CHECK(run_binary("certify --theorem flag --d 2 --v 1 --w 1 --m 2") == 0);
    CHECK(run_binary("certify --theorem flag --d 1 --v 0 --w 0 --m 2") == 1);
    CHECK(run_binary("certify --theorem flag --d 2 --v 1") == 2);  // missing params

    // End-to-end: search to a report file, then recheck it.
    json doc = square_instance();
    doc.erase("W");
    const std::string inst = write_temp("bin_search.json", doc);
    const std::string report = (temp_dir() / "bin_report.json").string();
    CHECK(run_binary("search --theorem cpt --r 2 --input " + inst + " --output " + report) == 0);
    CHECK(run_binary("recheck --input " + report) == 0);
}

TEST_CASE("search honors the strict-disjoint flag") {
    // V is a point of the square configuration itself; strict mode must
    // still find a W avoiding it.
    json doc = square_instance();
    doc.erase("W");
    doc["V"] = json::array({json::array({0, 0, 1})});
    JobSpec job;
    job.command = "search";
    job.theorem = "cpt";
    job.r = 1;
    job.strict_disjoint = true;
    job.input_path = write_temp("strict.json", doc);
    const RunResult res = run_job(job);
    if (res.exit_code == 0) {
        const LinSubspace v = subspace_from_json(res.report["instance"]["V"], 3);
        const LinSubspace w = subspace_from_json(res.report["instance"]["W"], 3);
        CHECK(meet(v, w).rank() == 0);
    }
}
