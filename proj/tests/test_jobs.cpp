#include <fstream>

#include "doctest.h"
#include "satake/jobs.hpp"

using namespace satake;
using nlohmann::json;

namespace {

json load_schema(const std::string& name) {
    std::ifstream in(std::string(SATAKE_SCHEMA_DIR) + "/" + name);
    REQUIRE(in.good());
    return json::parse(in);
}

JobSpec make_job(const std::string& command, json params, const std::string& format = "json") {
    JobSpec job;
    job.command = command;
    job.params = std::move(params);
    job.format = format;
    return job;
}

} // namespace

TEST_CASE("job specs round-trip through JSON") {
    JobSpec job = make_job("kostka", {{"type", "B2"}, {"lambda", {1, 0}}, {"mu", {0, 0}}}, "csv");
    job.limits.max_deg = 7;
    job.limits.depth = 9;
    JobSpec back = JobSpec::from_json(job.to_json());
    CHECK(back.command == job.command);
    CHECK(back.params == job.params);
    CHECK(back.format == job.format);
    CHECK(back.limits.max_deg == 7);
    CHECK(back.limits.depth == 9);
    CHECK_THROWS(JobSpec::from_json(json{{"format", "json"}})); // no command
}

TEST_CASE("graded multiplicity job") {
    JobResult r = run_job(make_job("kostka", {{"type", "A2"}, {"lambda", {1, 1}}, {"mu", {0, 0}}},
                                   "table"));
    CHECK(r.exit_code == 0);
    CHECK(r.report.find("q + q^2") != std::string::npos);
}

TEST_CASE("verification jobs emit schema-conforming reports") {
    json report_schema = load_schema("report.schema.json");
    JobSpec job = make_job("verify-eq1", {{"type", "A1"}, {"lambda", {2}}, {"mu", {0}}});
    job.limits.max_deg = 8;
    JobResult r = run_job(job);
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.report);
    CHECK(doc["verdict"] == "match");
    CHECK(doc["first_mismatch"].is_null());
    CHECK(!schema_violation(doc, report_schema));

    JobResult d7 = run_job(
        make_job("verify-diagram7", {{"type", "B2"}, {"lambda", {1, 1}}, {"mu", {0, 1}}}));
    CHECK(d7.exit_code == 0);
}

TEST_CASE("series jobs tag their grading variable") {
    // the rank-zero theory and all monopole output live in t = q^2
    json q = {{"vertices", {"0"}},
              {"edges", json::array()},
              {"v", {{"0", 1}}},
              {"w", {{"0", 2}}}};
    JobSpec job = make_job("monopole-hs", {{"quiver", q}});
    job.limits.max_deg = 5;
    JobResult r = run_job(job);
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.report);
    CHECK(doc["grading"] == "t");
    CHECK(doc["coeffs"][0] == 1);
    CHECK(doc["coeffs"][1] == 3);
    CHECK(doc["coeffs"][2] == 5);
    CHECK(!schema_violation(doc, load_schema("series.schema.json")));

    JobSpec sp = make_job("sym-power", {{"ell", 2}, {"k", 1}});
    sp.limits.max_deg = 4;
    json sdoc = json::parse(run_job(sp).report);
    CHECK(sdoc["grading"] == "t");
    CHECK(sdoc["coeffs"] == json({1, 0, 3, 0, 5}));
}

TEST_CASE("weight table job emits the documented CSV columns") {
    JobSpec job = make_job("weight-table", {{"type", "A1"}, {"lambda", {1, 0}}}, "csv");
    job.limits.depth = 3;
    JobResult r = run_job(job);
    CHECK(r.exit_code == 0);
    CHECK(r.report.rfind("mu_coords,delta_drop,multiplicity", 0) == 0);
    CHECK(r.report.find(",1,1") != std::string::npos); // level-one first string
}

TEST_CASE("affine multiplicity job") {
    JobSpec job = make_job(
        "affine-mult",
        {{"type", "A1"}, {"lambda", {1, 0}}, {"mu", {1, 0}}, {"delta_drop", 3}});
    job.limits.depth = 6;
    json doc = json::parse(run_job(job).report);
    CHECK(doc["multiplicity"] == 3); // partition number p(3)
}

TEST_CASE("input errors land in exit code 2 and name the problem") {
    CHECK(run_job(make_job("no-such-command", json::object())).exit_code == 2);

    JobResult missing = run_job(make_job("kostka", {{"type", "A2"}, {"lambda", {1, 1}}}));
    CHECK(missing.exit_code == 2);
    CHECK(missing.report.find("mu") != std::string::npos);

    JobResult extra = run_job(make_job(
        "kostka", {{"type", "A2"}, {"lambda", {1, 1}}, {"mu", {0, 0}}, {"bogus", 1}}));
    CHECK(extra.exit_code == 2);
    CHECK(extra.report.find("bogus") != std::string::npos);

    JobResult shape = run_job(make_job("kostka", {{"type", "A2"}, {"lambda", {1}}, {"mu", {0, 0}}}));
    CHECK(shape.exit_code == 2);
}

TEST_CASE("refused computations land in exit code 3 with the direction") {
    json q = {{"vertices", {"0"}},
              {"edges", json::array()},
              {"v", {{"0", 1}}},
              {"w", {{"0", 0}}}};
    JobResult r = run_job(make_job("monopole-hs", {{"quiver", q}}));
    CHECK(r.exit_code == 3);
    json doc = json::parse(r.report);
    CHECK(doc["error"].is_string());
    CHECK(doc["direction"].size() == 1);
}

TEST_CASE("quiver JSON parsing validates its input") {
    json good = {{"vertices", {"a", "b"}},
                 {"edges", json::array({json::array({"a", "b"})})},
                 {"v", {{"a", 1}, {"b", 1}}},
                 {"w", {{"a", 1}, {"b", 0}}}};
    QuiverGaugeDatum d = quiver_from_json(good);
    CHECK(d.size() == 2);
    CHECK(d.edges == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(!schema_violation(good, load_schema("quiver.schema.json")));

    json bad_edge = good;
    bad_edge["edges"] = json::array({json::array({"a", "c"})});
    CHECK_THROWS_AS(quiver_from_json(bad_edge), std::invalid_argument);
    json unlisted = good;
    unlisted["v"]["c"] = 1; // dimension for a vertex that was never declared
    CHECK_THROWS_AS(quiver_from_json(unlisted), std::invalid_argument);
    json omitted = good;
    omitted["w"].erase("b"); // omitted dimensions default to zero
    CHECK(quiver_from_json(omitted).w == std::vector<long long>{1, 0});
    json dup = good;
    dup["vertices"] = {"a", "a"};
    CHECK_THROWS_AS(quiver_from_json(dup), std::invalid_argument);
}

TEST_CASE("reruns are byte-identical") {
    JobSpec job = make_job("verify-eq1", {{"type", "G2"}, {"lambda", {1, 0}}, {"mu", {0, 0}}});
    job.limits.max_deg = 6;
    JobResult a = run_job(job);
    JobResult b = run_job(job);
    CHECK(a.exit_code == 0);
    CHECK(a.report == b.report);
}

TEST_CASE("structural schema checker") {
    json schema = {{"type", "object"},
                   {"required", {"name", "coeffs"}},
                   {"properties",
                    {{"name", {{"type", "string"}}},
                     {"coeffs", {{"type", "array"}, {"items", {{"type", "integer"}}}}},
                     {"verdict", {{"enum", {"match", "mismatch"}}}},
                     {"order", {{"type", "integer"}, {"minimum", 0}}}}}};
    CHECK(!schema_violation({{"name", "x"}, {"coeffs", {1, 2}}}, schema));
    CHECK(schema_violation({{"coeffs", {1, 2}}}, schema));             // missing required
    CHECK(schema_violation({{"name", 3}, {"coeffs", {1}}}, schema));   // wrong type
    CHECK(schema_violation({{"name", "x"}, {"coeffs", {1, "y"}}}, schema)); // bad item
    CHECK(schema_violation({{"name", "x"}, {"coeffs", json::array()}, {"verdict", "nope"}},
                           schema)); // enum
    CHECK(schema_violation({{"name", "x"}, {"coeffs", json::array()}, {"order", -1}},
                           schema)); // minimum
}

TEST_CASE("bundled sweep configuration is self-consistent") {
    json cfg = default_sweep_config();
    CHECK(cfg.contains("eq1"));
    CHECK(cfg.contains("coulomb"));
    json bad = cfg;
    bad["mystery_section"] = 1;
    CHECK_THROWS_AS(run_acceptance_suite(bad), std::invalid_argument);
}
