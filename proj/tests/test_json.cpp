#include <catch2/catch_amalgamated.hpp>

#include <string>

#include <exdyn/errors.hpp>
#include <exdyn/finite/json_io.hpp>
#include <exdyn/pipeline.hpp>

using namespace exdyn;
using namespace exdyn::finite;
using nlohmann::json;

TEST_CASE("a discrete input document parses into flow, topology and S") {
    FiniteInput in = parse_finite_input(std::string(
        R"({"size": 4, "map": [1, 2, 0, 0], "topology": "discrete", "S": [0, 1, 2]})"));
    REQUIRE(in.flow.size() == 4);
    REQUIRE(in.flow.step(3) == 0);
    REQUIRE(in.topo.is_t1());
    REQUIRE(in.s.has_value());
    REQUIRE(*in.s == point_set{0, 1, 2});
}

TEST_CASE("a min_open input document parses and S stays optional") {
    FiniteInput in = parse_finite_input(std::string(
        R"({"size": 2, "map": [1, 1], "topology": {"min_open": [[0], [0, 1]]}})"));
    REQUIRE(in.topo.min_open(1) == point_set{0, 1});
    REQUIRE_FALSE(in.topo.is_t1());
    REQUIRE_FALSE(in.s.has_value());
}

TEST_CASE("malformed input documents are rejected with parse errors") {
    auto reject = [](const std::string& text) {
        REQUIRE_THROWS_AS(parse_finite_input(text), parse_error);
    };
    reject("not json at all");
    reject(R"([1, 2, 3])");                                                  // not an object
    reject(R"({"map": [0], "topology": "discrete"})");                       // missing size
    reject(R"({"size": 0, "map": [], "topology": "discrete"})");             // non-positive size
    reject(R"({"size": 2, "topology": "discrete"})");                        // missing map
    reject(R"({"size": 2, "map": [0], "topology": "discrete"})");            // length mismatch
    reject(R"({"size": 2, "map": [0, 5], "topology": "discrete"})");         // value out of range
    reject(R"({"size": 2, "map": [0, -1], "topology": "discrete"})");        // negative value
    reject(R"({"size": 2, "map": [0, 0.5], "topology": "discrete"})");       // non-integer value
    reject(R"({"size": 2, "map": [0, 1]})");                                 // missing topology
    reject(R"({"size": 2, "map": [0, 1], "topology": "indiscrete"})");       // unknown topology
    reject(R"({"size": 2, "map": [0, 1], "topology": {"min_open": [[0]]}})"); // wrong length
    reject(R"({"size": 2, "map": [0, 1], "topology": {"min_open": [[0], [7]]}})"); // bad index
    reject(R"({"size": 2, "map": [0, 1], "topology": {"min_open": [[1], [0, 1]]}})"); // x not in min_open(x)
    reject(R"({"size": 2, "map": [0, 1], "topology": "discrete", "S": [2]})");        // S out of range
    reject(R"({"size": 2, "map": [0, 1], "topology": "discrete", "S": "all"})");      // S not an array
}

TEST_CASE("point sets serialize in increasing order") {
    REQUIRE(to_json(point_set{3, 0, 2}).dump() == "[0,2,3]");
    REQUIRE(to_json(point_set{}).dump() == "[]");
}

TEST_CASE("the analyze pipeline produces the full report") {
    json doc = json::parse(
        R"({"size": 4, "map": [1, 2, 0, 0], "topology": "discrete", "S": [0, 1, 2]})");
    pipeline::AnalyzeResult res = pipeline::run_finite_analyze(doc);
    REQUIRE(res.ok);

    const json& r = res.report;
    for (const char* key :
         {"size", "P", "Fix", "P_m", "C_m", "Poisson", "Lambda", "L", "bar_L", "D", "bar_D",
          "cech_D", "S", "PA_S", "WA_S", "A_S", "basins", "theorem_results"}) {
        INFO(key);
        REQUIRE(r.contains(key));
    }
    REQUIRE(r["size"] == 4);
    REQUIRE(r["P"] == json::parse("[0,1,2]"));
    REQUIRE(r["Fix"] == json::parse("[]"));
    REQUIRE(r["P_m"]["3"] == json::parse("[0,1,2]"));
    REQUIRE(r["C_m"]["3"] == json::parse("[0,1,2]"));
    REQUIRE(r["L"] == json::parse("[0,1,2]"));
    REQUIRE(r["D"] == json::parse("[0,1,2,3]"));
    REQUIRE(r["S"] == json::parse("[0,1,2]"));
    REQUIRE(r["theorem_results"].size() == 20);
    REQUIRE(r["basins"].size() == 3);
    REQUIRE(r["basins"][0]["cycle"] == json::parse("[0,1,2]"));
    REQUIRE(r["basins"][0]["period"] == 3);
    REQUIRE(r["basins"][0]["points"] == json::parse("[0]"));
    REQUIRE(r["basins"][1]["phase"] == 1);
    REQUIRE(r["basins"][1]["points"] == json::parse("[1]"));
    REQUIRE(r["basins"][2]["points"] == json::parse("[2,3]"));
    REQUIRE(r["basins"][2]["steenrod_representable"] == false);
    REQUIRE(r["basins"][2]["cech_component"].is_null());
}

TEST_CASE("the analyze pipeline is deterministic") {
    json doc = json::parse(R"({"size": 3, "map": [1, 2, 0], "topology": "discrete"})");
    std::string a = pipeline::run_finite_analyze(doc).report.dump();
    std::string b = pipeline::run_finite_analyze(doc).report.dump();
    REQUIRE(a == b);
}

TEST_CASE("hypothesis-violating failures keep analyze exit-clean") {
    json doc = json::parse(
        R"({"size": 2, "map": [1, 1], "topology": {"min_open": [[0], [0, 1]]}})");
    pipeline::AnalyzeResult res = pipeline::run_finite_analyze(doc);
    REQUIRE(res.ok); // failures occur, but only with violated hypotheses
    REQUIRE(res.report["L"] == json::parse("[0,1]"));
    REQUIRE(res.report["P"] == json::parse("[1]"));
    REQUIRE(res.report["theorem_results"]["periodic_points_equal_limit"]["holds"] == false);
    REQUIRE(res.report["theorem_results"]["periodic_points_equal_limit"]["hypothesis_satisfied"] ==
            false);
}

TEST_CASE("analyze rejects discontinuous maps") {
    json doc = json::parse(
        R"({"size": 2, "map": [1, 0], "topology": {"min_open": [[0], [0, 1]]}})");
    REQUIRE_THROWS_AS(pipeline::run_finite_analyze(doc), parse_error);
    REQUIRE_THROWS_WITH(pipeline::run_finite_analyze(doc),
                        Catch::Matchers::ContainsSubstring("not continuous"));
}

TEST_CASE("the verify pipeline reports a clean sweep") {
    pipeline::VerifyResult res = pipeline::run_finite_verify(3, 10, 42);
    REQUIRE(res.ok);
    REQUIRE(res.summary["failures_hypothesis_satisfied"] == 0);
    REQUIRE(res.summary["exhaustive_instances"] == 32);
    REQUIRE(res.summary["random_instances"] == 10);
    REQUIRE(res.summary["per_check"].size() == 20);
}

TEST_CASE("file helpers round-trip text and reject missing files") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "exdyn_json_test";
    fs::create_directories(dir);
    fs::path file = dir / "doc.json";
    pipeline::spill(file, "{\"size\": 1}\n");
    REQUIRE(pipeline::slurp(file) == "{\"size\": 1}\n");
    REQUIRE(pipeline::parse_json_file(file)["size"] == 1);
    REQUIRE_THROWS_AS(pipeline::slurp(dir / "absent.json"), io_error);
    pipeline::spill(file, "{broken");
    REQUIRE_THROWS_AS(pipeline::parse_json_file(file), parse_error);
    fs::remove_all(dir);
}
