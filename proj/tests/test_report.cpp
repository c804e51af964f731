#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "jacinf/mapio.hpp"
#include "jacinf/report.hpp"

using namespace jacinf;

TEST_CASE("json output is byte-identical across runs") {
    for (const char* src : {"x + y^2; y", "x; y", "x; x*y", "2x^3 + x*y; 3x^2 + y"}) {
        CAPTURE(src);
        Report r1 = analyze_map(parse_map(src), src);
        Report r2 = analyze_map(parse_map(src), src);
        CHECK(emit_json(r1) == emit_json(r2));
        CHECK(emit_text(r1) == emit_text(r2));
    }
}

TEST_CASE("json fields for the identity") {
    Report r = analyze_map(identity_map(), "x; y");
    auto j = nlohmann::json::parse(emit_json(r));
    CHECK(j["certificate"]["verdict"] == "automorphism");
    CHECK(j["certificate"]["strong_form"] == true);
    CHECK(j["checks"]["topological_degree"] == "1");
    CHECK(j["checks"]["t_self_intersection"] == "1");
    CHECK(j["schema_version"] == "1");
    CHECK(j["resolution"]["nodes"].size() == 1);
    CHECK(j["resolution"]["nodes"][0]["p"] == "6");
    CHECK(j["resolution"]["nodes"][0]["a"] == "1");
    CHECK(j["resolution"]["nodes"][0]["s"] == "1");
}

TEST_CASE("json fields for F2") {
    Report r = analyze_map(parse_map("x + y^2; y"), "x + y^2; y");
    auto j = nlohmann::json::parse(emit_json(r));
    REQUIRE(j["resolution"]["nodes"].size() == 4);
    CHECK(j["resolution"]["nodes"][3]["p"] == "6");
    CHECK(j["resolution"]["nodes"][3]["a"] == "1");
    CHECK(j["resolution"]["edges"].size() == 3);
    CHECK(j["checks"]["pole_pairs"].empty());
    CHECK(j["checks"]["order_relations"]["all_hold"] == true);
    CHECK(j["certificate"]["verdict"] == "automorphism");
}

TEST_CASE("json verdict for (x, xy)") {
    Report r = analyze_map(parse_map("x; x*y"), "x; x*y");
    auto j = nlohmann::json::parse(emit_json(r));
    CHECK(j["certificate"]["verdict"] == "precondition-failed");
    CHECK(j["non_properness"]["empty"] == false);
    CHECK(j["non_properness"]["flagged"] == false);
    CHECK(j["non_properness"]["entries"][0]["image"] == "x = 0");
}

TEST_CASE("dot output for the identity") {
    Report r = analyze_map(identity_map(), "x; y");
    std::string dot = emit_dot(r.tree, r.image_mults);
    CHECK(dot.find("graph jacinf {") != std::string::npos);
    CHECK(dot.find("n0 [label=\"L\\n(p=6, a=1, s=1)\", peripheries=2];") != std::string::npos);
    CHECK(dot.find("--") == std::string::npos);  // no edges
}

TEST_CASE("dot output for F2 and F3 matches Graph 2") {
    {
        Report r = analyze_map(parse_map("x + y^2; y"), "f2");
        std::string dot = emit_dot(r.tree, r.image_mults);
        CHECK(dot.find("n0 -- n2;") != std::string::npos);
        CHECK(dot.find("n1 -- n2;") != std::string::npos);
        CHECK(dot.find("n2 -- n3;") != std::string::npos);
        int nodes = 0, edges = 0;
        for (size_t p = 0; (p = dot.find("[label=", p)) != std::string::npos; ++p) ++nodes;
        for (size_t p = 0; (p = dot.find("--", p)) != std::string::npos; ++p) ++edges;
        CHECK(nodes == 4);
        CHECK(edges == 3);
    }
    {
        Report r = analyze_map(parse_map("x + y^3; y"), "f3");
        std::string dot = emit_dot(r.tree, r.image_mults);
        CHECK(dot.find("n0 -- n2;") != std::string::npos);
        CHECK(dot.find("n2 -- n3;") != std::string::npos);
        CHECK(dot.find("n1 -- n3;") != std::string::npos);
        CHECK(dot.find("n3 -- n4;") != std::string::npos);
        CHECK(dot.find("n4 -- n5;") != std::string::npos);
    }
}

TEST_CASE("text report carries the main sections") {
    Report r = analyze_map(parse_map("x + y^2; y"), "x + y^2; y");
    std::string text = emit_text(r);
    CHECK(text.find("certificate: automorphism (strong form") != std::string::npos);
    CHECK(text.find("pole pairs: consistent") != std::string::npos);
    CHECK(text.find("T^2 = 1, topological degree = 1 (match)") != std::string::npos);
    CHECK(text.find("non-properness report: empty") != std::string::npos);
}

TEST_CASE("degree note for non-dominant maps") {
    Report r = analyze_map(parse_map("x; x"), "x; x");
    auto j = nlohmann::json::parse(emit_json(r));
    CHECK(j["checks"]["topological_degree"].is_null());
    CHECK(j["checks"]["degree_note"] == "map not dominant: Jacobian vanishes identically");
}
