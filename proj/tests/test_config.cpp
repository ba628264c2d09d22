#include "topskit/config.hpp"
#include "topskit/error.hpp"
#include "topskit/report.hpp"

#include <doctest.h>

using namespace topskit;

namespace {

std::string config_path(const char* name) { return std::string(TOPSKIT_CONFIG_DIR "/") + name; }

const char* const all_configs[] = {
    "fig1.json", "fig1-relabelled.json", "two-map-half.json", "two-map-two-thirds.json",
    "two-map-golden.json", "reconstruction-ssi.json", "reconstruction-ssi-no-self-ref.json",
    "reconstruction-never-invariant.json"};

} // namespace

TEST_CASE("numbers")
{
    using nlohmann::json;
    CHECK(parse_number(json("3/4")) == ExactReal::fraction(3, 4));
    CHECK(parse_number(json(5)) == ExactReal(5));
    ExactReal g = parse_number(json::parse(R"({"poly": ["-1", "1", "1"], "interval": ["0.6", "0.7"]})"));
    CHECK(g * g + g == ExactReal(1));
    CHECK(parse_number(json::parse(R"({"field": ["1", "-1"]})"), g) == ExactReal(1) - g);
    CHECK_THROWS_AS(parse_number(json::parse(R"({"field": ["1"]})")), ParseError);
    CHECK_THROWS_AS(parse_number(json(true)), ParseError);
    CHECK_THROWS_AS(parse_number(json("x")), ParseError);
}

TEST_CASE("malformed configs")
{
    CHECK_THROWS_AS(parse_config_text("{"), ParseError);
    CHECK_THROWS_AS(parse_config_text(R"({"vertices": ["v"]})"), ParseError);
    CHECK_THROWS_AS(
        parse_config_text(R"({"vertices": ["v"], "edges": [{"label": 1, "source": "w", "target": "v", "a": "1/2", "b": "0"}]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_config_text(R"({"vertices": ["v"], "edges": [{"label": 1, "source": "v", "target": "v", "b": "0"}]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_config_text(R"({"vertices": ["v"], "edges": [{"label": 2, "source": "v", "target": "v", "a": "1/2", "b": "0"}]})"),
        ValidationError);
    CHECK_THROWS_AS(load_config(config_path("does-not-exist.json")), ParseError);
}

TEST_CASE("round trip")
{
    for (const char* c : all_configs) {
        GraphIFS g = load_config(config_path(c));
        auto text = config_to_json(g).dump();
        GraphIFS back = parse_config_text(text);
        CHECK_MESSAGE(config_to_json(back).dump() == text, c);
        REQUIRE(back.edges().size() == g.edges().size());
        for (std::size_t i = 0; i < g.edges().size(); ++i)
            CHECK(back.edges()[i].map == g.edges()[i].map);
    }
}

TEST_CASE("report keys")
{
    GraphIFS g = load_config(config_path("fig1.json"));
    Json v = to_json(g, invariance_verdict(g));
    CHECK(v["shift_invariant"] == false);
    CHECK(v.contains("witness_point"));
    Json r = to_json(enumerate(RhoParam(ExactReal::fraction(2, 3)), 8));
    for (const char* key : {"rho", "max_len", "entries", "finite_type_sufficient", "truncated", "lemma_checks",
                            "conjecture_status", "pattern_scan", "note"})
        CHECK_MESSAGE(r.contains(key), key);
    CHECK(r["rho"] == "2/3");
    CHECK(r["entries"][0]["word"] == "211");
    CHECK(r["entries"][0]["endpoint"] == "17/27");
}

TEST_CASE("reports are deterministic")
{
    GraphIFS g = load_config(config_path("fig1.json"));
    CHECK(to_json(ordering_search(g)).dump() == to_json(ordering_search(g)).dump());
    CHECK(to_json(g, upsilon(g, 3)).dump() == to_json(g, upsilon(g, 3)).dump());
}
