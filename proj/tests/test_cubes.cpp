#include <catch2/catch_amalgamated.hpp>

#include "common.hpp"
#include "cubecross/cubes.hpp"
#include "cubecross/iso.hpp"

using namespace cubecross;
using namespace testing_support;

TEST_CASE("pair-related relation") {
    CHECK(pair_related("00", "00"));
    CHECK(pair_related("10", "10"));
    CHECK(pair_related("01", "11"));
    CHECK(pair_related("11", "01"));
    CHECK(!pair_related("00", "01"));
    CHECK(!pair_related("10", "01"));
    CHECK(!pair_related("11", "11"));
}

TEST_CASE("generators: counts, regularity, connectivity") {
    for (int n = 1; n <= 5; ++n) {
        std::vector<CubeSpec> specs = {{CubeFamily::Q, n},
                                       {CubeFamily::CQ, n},
                                       {CubeFamily::MQ, n, 0},
                                       {CubeFamily::MQ, n, 1}};
        if (n >= 2) specs.push_back({CubeFamily::LTQ, n});
        for (const auto& spec : specs) {
            INFO(family_name(spec) << " n=" << n);
            auto g = generate(spec);
            CHECK(g.n() == (1 << n));
            CHECK(g.m() == n * (1 << (n - 1)));
            CHECK(g.is_regular(n));
            CHECK(g.is_connected());
            CHECK(g.has_labels());
        }
    }
    CHECK_THROWS_AS(generate({CubeFamily::LTQ, 1}), std::invalid_argument);
    CHECK_THROWS_AS(generate({CubeFamily::Q, 0}), std::invalid_argument);
}

TEST_CASE("small cube identities") {
    CHECK(is_isomorphic(generate({CubeFamily::CQ, 2}), cycle(4)));
    CHECK(is_isomorphic(generate({CubeFamily::Q, 2}), cycle(4)));
    CHECK(is_isomorphic(generate({CubeFamily::CQ, 1}), complete(2)));
}

TEST_CASE("split view and the matching bijection") {
    auto g = generate({CubeFamily::LTQ, 4});
    auto sv = split(g);
    CHECK(sv.left.verts.size() == 8);
    CHECK(sv.right.verts.size() == 8);
    CHECK(sv.cross_edges.size() == 8);
    CHECK(is_isomorphic(sv.left_graph.graph, generate({CubeFamily::LTQ, 3})));
    auto pi = pi_map(sv, g);
    for (int u : sv.left.verts) {
        CHECK(pi[u] >= 0);
        CHECK(g.has_edge(u, pi[u]));
        CHECK(sv.right.contains(pi[u]));
    }
}
