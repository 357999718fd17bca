#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "etacalc/check_suites.hpp"
#include "etacalc/cobordism.hpp"
#include "etacalc/json_io.hpp"
#include "etacalc/random_models.hpp"
#include "etacalc/space_ast.hpp"
#include "test_util.hpp"

#include <random>

using namespace etacalc;
using nlohmann::json;

namespace {

BuiltSpace build_from(const char* text) {
    return build_space(parse_space_ast(json::parse(text)));
}

} // namespace

TEST_CASE("parse and build every kind") {
    {
        const BuiltSpace s = build_from(R"({"kind":"point","q":2})");
        CHECK(s.model.dimension() == 0);
        CHECK(s.conjugation.has_value());
    }
    {
        const BuiltSpace s =
            build_from(R"({"kind":"real_flag","q":2,"S":[[1],[2]],"parts":[1,1]})");
        CHECK(s.model.points().size() == 2);
        CHECK(s.model.dimension() == 1);
        CHECK(s.conjugation.has_value());
    }
    {
        const BuiltSpace s =
            build_from(R"({"kind":"complex_flag","q":2,"S":[[1],[2]],"parts":[1,1]})");
        CHECK(s.model.dimension() == 2);
        CHECK_FALSE(s.conjugation.has_value());
    }
    {
        const BuiltSpace s = build_from(R"({"kind":"proj","s":3,"chars":[[1],[2],[3]]})");
        CHECK(s.model.points().size() == 3);
        CHECK_FALSE(s.conjugation.has_value());
        CHECK_FALSE(is_null_cobordant(s.model));
    }
    {
        const BuiltSpace s = build_from(
            R"({"kind":"dold","proj":{"s":2,"chars":[[1],[2]]},
                "base":{"kind":"real_flag","q":2,"S":[[1],[2]],"parts":[1,1]}})");
        CHECK(s.model.points().size() == 4);
        CHECK(s.model.rank().value() == 4);
        CHECK(s.model.dimension() == 3);
        CHECK_FALSE(s.conjugation.has_value());
    }
    {
        const BuiltSpace s = build_from(
            R"({"kind":"product","factors":[{"kind":"point","q":2},
                {"kind":"real_flag","q":2,"S":[[1],[2]],"parts":[1,1]}]})");
        CHECK(s.model.dimension() == 1);
        CHECK(s.conjugation.has_value()); // product of conjugation spaces
    }
    {
        const BuiltSpace s = build_from(
            R"({"kind":"disjoint_union","summands":[
                {"kind":"real_flag","q":2,"S":[[1],[2]],"parts":[1,1]},
                {"kind":"real_flag","q":2,"S":[[1],[1,2]],"parts":[1,1]}]})");
        CHECK(s.model.points().size() == 4);
        CHECK(s.conjugation.has_value());
    }
    {
        // a union involving a non-conjugation summand loses the structure
        const BuiltSpace s = build_from(
            R"({"kind":"disjoint_union","summands":[
                {"kind":"proj","s":2,"chars":[[1],[2]]},
                {"kind":"real_flag","q":2,"S":[[1],[2]],"parts":[1,1]}]})");
        CHECK_FALSE(s.conjugation.has_value());
    }
}

TEST_CASE("parse errors name the offending field") {
    auto message_of = [](const char* text) {
        try {
            build_space(parse_space_ast(json::parse(text)));
            return std::string("no error");
        } catch (const std::exception& e) {
            return std::string(e.what());
        }
    };
    CHECK(message_of(R"({"q":2})").find("$.kind") != std::string::npos);
    CHECK(message_of(R"({"kind":"point"})").find("$.q") != std::string::npos);
    CHECK(message_of(R"({"kind":"point","q":"x"})").find("$.q") != std::string::npos);
    CHECK(message_of(R"({"kind":"point","q":31})").find("$.q") != std::string::npos);
    CHECK(message_of(R"({"kind":"weird","q":1})").find("$.kind") != std::string::npos);
    CHECK(message_of(R"({"kind":"real_flag","q":2,"S":[[1],[9]],"parts":[1,1]})")
              .find("$.S[1]") != std::string::npos);
    CHECK(message_of(R"({"kind":"real_flag","q":2,"S":[[1],[2]],"parts":[1]})")
              .find("parts") != std::string::npos);
    CHECK(message_of(R"({"kind":"proj","s":2,"chars":[[1],[1]]})")
              .find("stationary set not finite") != std::string::npos);
    CHECK(message_of(R"({"kind":"product","factors":[]})").find("$.factors") !=
          std::string::npos);
    CHECK(message_of(
              R"({"kind":"dold","proj":{"s":2,"chars":[[1]]},
                  "base":{"kind":"proj","s":2,"chars":[[1]]}})")
              .find("conjugation") != std::string::npos);
    // a dold space cannot itself be a dold base
    CHECK(message_of(
              R"({"kind":"dold","proj":{"s":1,"chars":[[1]]},
                  "base":{"kind":"dold","proj":{"s":1,"chars":[[1]]},
                          "base":{"kind":"point","q":1}}})")
              .find("conjugation") != std::string::npos);
}

TEST_CASE("build-time mismatches are reported") {
    CHECK_THROWS_WITH_AS(
        build_from(R"({"kind":"product","factors":[{"kind":"point","q":1},
                       {"kind":"point","q":2}]})"),
        "rank mismatch", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        build_from(
            R"({"kind":"disjoint_union","summands":[
                {"kind":"real_flag","q":2,"S":[[1],[2]],"parts":[1,1]},
                {"kind":"point","q":2}]})"),
        "dimension mismatch", std::invalid_argument);
}

TEST_CASE("ast serialization round-trips to an equal model") {
    const char* cases[] = {
        R"({"kind":"point","q":0})",
        R"({"kind":"real_flag","q":3,"S":[[1],[2],[1,3]],"parts":[2,1]})",
        R"({"kind":"complex_flag","q":2,"S":[[1],[2],[1,2]],"parts":[1,2]})",
        R"({"kind":"proj","s":2,"chars":[[],[1],[1,2]]})",
        R"({"kind":"dold","proj":{"s":2,"chars":[[1],[2]]},
            "base":{"kind":"product","factors":[{"kind":"point","q":2},
                    {"kind":"real_flag","q":2,"S":[[1],[2]],"parts":[1,1]}]}})",
        R"({"kind":"disjoint_union","summands":[
            {"kind":"real_flag","q":2,"S":[[1],[2]],"parts":[1,1]},
            {"kind":"real_flag","q":2,"S":[[2],[1,2]],"parts":[1,1]}]})",
    };
    for (const char* text : cases) {
        const SpaceAst ast = parse_space_ast(json::parse(text));
        const SpaceAst reparsed = parse_space_ast(space_ast_to_json(ast));
        CHECK(build_space(reparsed).model == build_space(ast).model);
        // serialization is stable from the first normalization on
        CHECK(space_ast_to_json(reparsed) == space_ast_to_json(ast));
    }
}

TEST_CASE("element json round-trip reproduces the canonical form") {
    std::mt19937 rng(13);
    for (int t = 0; t < 200; ++t) {
        const GroupRank q(1 + static_cast<int>(rng() % 3));
        const RepRingElement e = random_element(rng, q, 5, 3, 3);
        CHECK(element_from_json(element_to_json(e)) == e);
    }
    CHECK(element_from_json(element_to_json(RepRingElement::zero(GroupRank(2)))) ==
          RepRingElement::zero(GroupRank(2)));
}

TEST_CASE("witness and model json shapes") {
    const FixedPointModel rp2 =
        proj_space(ProjSpec(GroupRank(3), {Character(1, GroupRank(3)),
                                           Character(2, GroupRank(3)),
                                           Character(4, GroupRank(3))}));
    const json w = witness_to_json(pairing_witness(rp2));
    CHECK(w["pairs"].is_array());
    CHECK(w["residual"].size() == 3);
    const json m = model_to_json(rp2);
    CHECK(m["rank"] == 3);
    CHECK(m["dimension"] == 2);
    CHECK(m["points"].size() == 3);
    CHECK(m["points"][0]["label"] == "[e_1]");
}

TEST_CASE("file loading errors") {
    CHECK_THROWS_AS(parse_space_file("/nonexistent/etacalc-space.json"), ParseError);
}

TEST_CASE("oracle cross-checks pass on a composite space") {
    const SpaceAst ast = parse_space_ast(json::parse(
        R"({"kind":"dold","proj":{"s":2,"chars":[[1],[2],[1,2]]},
            "base":{"kind":"real_flag","q":2,"S":[[1],[2],[1,2]],"parts":[1,2]}})"));
    for (const CheckResult& c : oracle_cross_checks(ast))
        CHECK(c.pass);
}
