#include <catch2/catch_amalgamated.hpp>

#include "common.hpp"
#include "cubecross/cubes.hpp"
#include "cubecross/iso.hpp"

using namespace cubecross;
using namespace testing_support;

TEST_CASE("order-3 variants coincide") {
    auto cq = generate({CubeFamily::CQ, 3});
    auto ltq = generate({CubeFamily::LTQ, 3});
    auto mq0 = generate({CubeFamily::MQ, 3, 0});
    auto mq1 = generate({CubeFamily::MQ, 3, 1});
    for (const Graph* b : {&ltq, &mq0, &mq1}) {
        auto m = is_isomorphic(cq, *b);
        REQUIRE(m.has_value());
        CHECK(verify_mapping(cq, *b, *m));
    }
}

TEST_CASE("order-4 relations") {
    auto cq4 = generate({CubeFamily::CQ, 4});
    auto ltq4 = generate({CubeFamily::LTQ, 4});
    auto mq0 = generate({CubeFamily::MQ, 4, 0});
    auto mq1 = generate({CubeFamily::MQ, 4, 1});
    auto m = is_isomorphic(mq0, ltq4);
    REQUIRE(m.has_value());
    CHECK(verify_mapping(mq0, ltq4, *m));
    CHECK(!is_isomorphic(cq4, ltq4));
    CHECK(!is_isomorphic(cq4, mq1));
    CHECK(!is_isomorphic(ltq4, mq1));
}

TEST_CASE("identity and negative cases") {
    auto g = generate({CubeFamily::CQ, 3});
    auto m = is_isomorphic(g, g);
    REQUIRE(m.has_value());
    CHECK(verify_mapping(g, g, *m));
    CHECK(!is_isomorphic(g, generate({CubeFamily::Q, 3})));
    CHECK(!is_isomorphic(complete(4), cycle(4)));
}

TEST_CASE("automorphism group orders") {
    CHECK(automorphisms(cycle(4)).order == 8);
    CHECK(automorphisms(generate({CubeFamily::Q, 3})).order == 48);
    CHECK(automorphisms(generate({CubeFamily::Q, 4})).order == 384);
    CHECK(automorphisms(generate({CubeFamily::CQ, 3})).order == 16);
    CHECK(automorphisms(complete(4)).order == 24);
}

TEST_CASE("mapping verification rejects non-isomorphisms") {
    auto g = cycle(4);
    IsoMapping bad{0, 2, 1, 3};
    CHECK(!verify_mapping(g, g, bad));
}
