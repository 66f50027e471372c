#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "ageal/builtins.hpp"
#include "ageal/errors.hpp"
#include "ageal/json_io.hpp"
#include "ageal/reports.hpp"
#include "ageal/smallrng.hpp"
#include "ageal/version.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace ageal;

TEST_CASE("structure JSON round trip") {
    SplitMix64 rng(11);
    for (StructureKind kind : {StructureKind::graph, StructureKind::digraph, StructureKind::tournament}) {
        FiniteStructure s = random_structure(kind, 5, rng);
        FiniteStructure back = structure_from_json(to_json(s));
        CHECK(s == back);
    }
    CHECK(classify_input(to_json(random_structure(StructureKind::graph, 3, rng))) == InputKind::structure);
}

TEST_CASE("blueprint JSON round trip") {
    for (const char* name : {"clique-plus-coclique", "wheel-plus-coclique", "c3-chains", "rado-window:4"}) {
        Blueprint b = builtin_blueprint(name);
        Blueprint back = blueprint_from_json(to_json(b));
        CHECK(profile_prefix(back, 6) == profile_prefix(b, 6));
        CHECK(back.blocks() == b.blocks());
        CHECK(classify_input(to_json(b)) == InputKind::blueprint);
    }
}

TEST_CASE("groupoid JSON round trip") {
    for (const char* name : {"noncm", "qsym:2", "sym:3"}) {
        PermutationGroupoid g = builtin_groupoid(name);
        PermutationGroupoid back = groupoid_from_json(to_json(g));
        CHECK(back.elements == g.elements);
        CHECK(classify_input(to_json(g)) == InputKind::groupoid);
    }
}

TEST_CASE("series JSON round trip") {
    SeriesPrefix p = SeriesPrefix::from_counts({1, 1, 2, 3, 5, 8});
    SeriesPrefix back = series_from_json(to_json(p));
    CHECK(back.phi == p.phi);
    CHECK(classify_input(to_json(p)) == InputKind::series);
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(structure_from_json("not json"), input_error);
    CHECK_THROWS_AS(structure_from_json("{}"), input_error);
    CHECK_THROWS_AS(structure_from_json(R"({"signature":[{"name":"adj","arity":5}],"size":1,"tuples":{}})"),
                    input_error);
    CHECK_THROWS_AS(blueprint_from_json(R"({"template":{},"blocks":[]})"), input_error);
    CHECK_THROWS_AS(groupoid_from_json(R"({"k":2,"generators":[{"map":{"1":5}}]})"), input_error);
    CHECK_THROWS_AS(groupoid_from_json(R"({"k":2,"generators":[{"map":{"1":2,"2":2}}]})"), input_error);
    CHECK_THROWS_AS(series_from_json(R"({"phi":[2]})"), input_error);
    CHECK_THROWS_AS(classify_input(R"({"weird":1})"), input_error);
}

TEST_CASE("groupoid parsing closes over the generators") {
    // a single arrow on 3 points closes to the ten-element groupoid
    PermutationGroupoid g = groupoid_from_json(R"({"k":3,"generators":[{"map":{"1":2}}]})");
    CHECK(g.elements.size() == 10);
    CHECK(is_closed(g));
}

TEST_CASE("bare decomposition report shape") {
    DecompositionReport rep = decomposition_of_blueprint(builtin_blueprint("wheel-plus-coclique"), 5);
    nlohmann::json doc = nlohmann::json::parse(decomposition_report_json(rep));
    CHECK(doc["dimension"] == 2);
    CHECK(doc["stabilized"] == true);
    CHECK(doc["blocks"].size() == 3);
    CHECK(doc["window"] == 5);
}

TEST_CASE("format names parse") {
    CHECK(parse_format("json") == OutputFormat::json);
    CHECK(parse_format("csv") == OutputFormat::csv);
    CHECK(parse_format("text") == OutputFormat::text);
    CHECK_THROWS_AS(parse_format("yaml"), input_error);
}

TEST_CASE("series analysis bundles both fits") {
    SeriesPrefix cpc = SeriesPrefix::from_counts(profile_prefix(builtin_blueprint("clique-plus-coclique"), 20));
    SeriesAnalysis a = analyze_series(cpc, 2);
    CHECK(a.power_form.ok);
    CHECK(a.theorem_form.ok);
    CHECK(a.have_qp);
    CHECK(a.matched_from == 1);
    CHECK(a.nonneg.found);
    // the three-chain profile has period 3: no fit over (1-Z)^3, staircase fits
    SeriesPrefix c3 = SeriesPrefix::from_counts(profile_prefix(builtin_blueprint("c3-chains"), 16));
    SeriesAnalysis a3 = analyze_series(c3, 3);
    CHECK_FALSE(a3.power_form.ok);
    CHECK(a3.theorem_form.ok);
    CHECK(a3.qp.degree() == 2);
}

TEST_CASE("JSON reports carry the envelope and a deterministic result") {
    RunInfo run{"series", {{"builtin", "clique-plus-coclique"}, {"N", "14"}}, 7, 123};
    SeriesPrefix cpc = SeriesPrefix::from_counts(profile_prefix(builtin_blueprint("clique-plus-coclique"), 14));
    SeriesAnalysis a = analyze_series(cpc, 2);
    nlohmann::json doc = nlohmann::json::parse(render_series(run, a, OutputFormat::json));
    CHECK(doc["tool"] == "ageal");
    CHECK(doc["version"] == version_string);
    CHECK(doc["command"] == "series");
    CHECK(doc["seed"] == 7);
    CHECK(doc["config"]["N"] == "14");
    CHECK(doc["result"]["power_form"]["ok"] == true);
    CHECK(doc["result"]["phi"][5] == 5);

    RunInfo run2 = run;
    run2.elapsed_ms = 9999;  // timing must not leak into the result subtree
    nlohmann::json doc2 = nlohmann::json::parse(render_series(run2, a, OutputFormat::json));
    CHECK(doc["result"] == doc2["result"]);
}

TEST_CASE("CSV exports") {
    SeriesPrefix cpc = SeriesPrefix::from_counts(profile_prefix(builtin_blueprint("clique-plus-coclique"), 12));
    SeriesAnalysis a = analyze_series(cpc, 2);
    REQUIRE(a.have_qp);
    std::string csv = series_csv(a.prefix, &a.qp);
    CHECK(csv.rfind("n,phi,quasi_polynomial\n", 0) == 0);
    CHECK(csv.find("\n3,3,3\n") != std::string::npos);

    std::string constants = structure_constants_csv(builtin_blueprint("clique-plus-coclique"), 2);
    CHECK(constants.rfind("rho,sigma,tau,c\n", 0) == 0);
    CHECK(constants.find("2") != std::string::npos);
}

TEST_CASE("all renderers produce output in all formats") {
    RunInfo run{"demo", {}, 0, 1};
    Blueprint b = builtin_blueprint("wheel-plus-coclique");
    SeriesPrefix phi = SeriesPrefix::from_counts(profile_prefix(b, 10));
    DecomposeSummary ds = summarize_decomposition(b, 5);
    AlgebraSummary as = summarize_algebra(b, 4, 3);
    GroupoidSummary gs = summarize_groupoid(builtin_groupoid("noncm"), 5, 3);
    std::vector<CheckResult> checks = {{"demo-check", true, "fine"}};
    for (OutputFormat f : {OutputFormat::json, OutputFormat::csv, OutputFormat::text}) {
        CHECK_FALSE(render_profile(run, phi, growth_degree(phi), f).empty());
        CHECK_FALSE(render_decompose(run, ds, f).empty());
        CHECK_FALSE(render_series(run, analyze_series(phi, 2), f).empty());
        CHECK_FALSE(render_algebra(run, as, f).empty());
        CHECK_FALSE(render_groupoid(run, gs, f).empty());
        CHECK_FALSE(render_checks(run, checks, f).empty());
    }
}
