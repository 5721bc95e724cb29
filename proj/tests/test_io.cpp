#include <catch2/catch_amalgamated.hpp>

#include "common.hpp"
#include "cubecross/cubes.hpp"
#include "cubecross/io.hpp"
#include "cubecross/realize.hpp"

using namespace cubecross;
using namespace testing_support;

TEST_CASE("graph files round-trip canonically") {
    for (const Graph& g : {generate({CubeFamily::CQ, 3}),
                           generate({CubeFamily::LTQ, 4}), complete(5)}) {
        auto text = write_graph(g);
        auto back = parse_graph(text);
        CHECK(back.n() == g.n());
        CHECK(back.edges() == g.edges());
        CHECK(write_graph(back) == text);
        if (g.has_labels())
            for (int v = 0; v < g.n(); ++v) CHECK(back.label(v) == g.label(v));
    }
}

TEST_CASE("graph parser accepts comments and rejects malformed input") {
    auto g = parse_graph("# a triangle\np 3 3\ne 0 1\ne 1 2 # tail comment\ne 0 2\n");
    CHECK(g.n() == 3);
    CHECK(g.m() == 3);
    CHECK_THROWS_AS(parse_graph("e 0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("p 3 2\ne 0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("p 3 1\ne 0 5\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("p 3 1\nq 0 1\ne 0 1\n"), std::invalid_argument);
}

TEST_CASE("drawing files round-trip bit-exactly") {
    auto g = generate({CubeFamily::CQ, 3});
    auto r = crossing_number(g);
    auto d = realize_drawing(g, *r.certificate);
    auto j = drawing_to_json(d);
    auto d2 = drawing_from_json(j);
    CHECK(drawing_to_json(d2) == j);
    CHECK(d2.pos == d.pos);
    CHECK(crossing_count(d2) == crossing_count(d));
    CHECK(j.at("crossings").get<int>() == 1);
}

TEST_CASE("result records embed verifiable certificates") {
    auto g = generate({CubeFamily::CQ, 3});
    auto r = crossing_number(g, {}, 5);
    auto j = result_to_json(g, r, 5, 0.25, "inline");
    CHECK(j.at("exact").get<bool>());
    CHECK(j.at("lower").get<int>() == 1);
    CHECK(j.at("upper").get<int>() == 1);
    CHECK(j.at("seed").get<unsigned>() == 5);
    CHECK(j.at("version").get<std::string>() == kToolVersion);
    auto cert = certificate_from_json(j.at("certificate"));
    CHECK(verify_certificate(g, cert));
}
