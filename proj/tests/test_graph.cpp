#include <catch2/catch_amalgamated.hpp>

#include "common.hpp"
#include "cubecross/cubes.hpp"
#include "cubecross/enumerate.hpp"
#include "cubecross/graph.hpp"

using namespace cubecross;
using namespace testing_support;

TEST_CASE("graph construction validates input") {
    CHECK_THROWS_AS(Graph::make(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::make(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::make(2, {{0, 2}}), std::invalid_argument);
    auto g = Graph::make(3, {{2, 1}, {0, 1}});
    CHECK(g.m() == 2);
    CHECK(g.edges()[0] == Edge{0, 1});
    CHECK(g.has_edge(1, 2));
    CHECK(g.degree(1) == 2);
    CHECK(!g.is_regular(2));
}

TEST_CASE("boundary counts match equation (2) on 3-regular fixtures") {
    for (const Graph& g : {generate({CubeFamily::Q, 3}),
                           generate({CubeFamily::CQ, 3}),
                           generate({CubeFamily::LTQ, 3}),
                           generate({CubeFamily::MQ, 3, 0}),
                           generate({CubeFamily::MQ, 3, 1})}) {
        REQUIRE(g.is_regular(3));
        for (std::uint32_t mask = 1; mask + 1 < (1u << g.n()); ++mask) {
            auto x = VertexSubset::from_mask(mask, g.n());
            auto bc = boundary_and_counts(g, x, x.complement(g));
            CHECK(bc.count ==
                  3 * static_cast<int>(x.verts.size()) - 2 * internal_edge_count(g, x));
        }
    }
}

TEST_CASE("induced subgraph classification") {
    auto q3 = generate({CubeFamily::Q, 3});
    CHECK(classify_induced(q3, VertexSubset{{0, 1}}).is_path(2));
    CHECK(classify_induced(q3, VertexSubset{{0, 1, 3, 2}}).is_cycle(4));
    CHECK(classify_induced(q3, VertexSubset{{0, 1, 2, 4}}).kind ==
          InducedClass::Kind::Other);
    auto k3 = complete(3);
    CHECK(classify_induced(k3, VertexSubset{{0, 1, 2}}).is_cycle(3));
}

TEST_CASE("girth") {
    CHECK(girth(complete(4)) == 3);
    CHECK(girth(generate({CubeFamily::Q, 3})) == 4);
    CHECK(girth(generate({CubeFamily::CQ, 3})) == 4);
    CHECK(girth(cycle(7)) == 7);
    CHECK(!girth(Graph::make(3, {{0, 1}, {1, 2}})).has_value());
}

TEST_CASE("C4|C4 partition census") {
    CHECK(find_c4_partitions(generate({CubeFamily::CQ, 3})).size() == 2);
    CHECK(find_c4_partitions(generate({CubeFamily::Q, 3})).size() == 3);
    CHECK(find_c4_partitions(cycle(8)).empty());
}

TEST_CASE("cycle enumeration") {
    CHECK(all_cycles(complete(4)).size() == 7);
    CHECK(all_cycles(cycle(5)).size() == 1);
    CHECK(all_cycles(generate({CubeFamily::Q, 3})).size() == 28);
}

TEST_CASE("subset and partition enumeration counts") {
    long subsets = 0;
    for_each_subset(8, 3, [&](const VertexSubset&) { ++subsets; });
    CHECK(subsets == 56);
    long parts = 0;
    for_each_partition(8, 4, [&](const std::vector<VertexSubset>&) { ++parts; });
    CHECK(parts == 1701);  // Stirling S(8,4)
}
