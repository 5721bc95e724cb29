#include <catch2/catch_amalgamated.hpp>

#include "common.hpp"
#include "cubecross/cubes.hpp"
#include "cubecross/lemmas.hpp"

using namespace cubecross;
using namespace testing_support;

TEST_CASE("section 2 lemmas hold on CQ3") {
    auto g = generate({CubeFamily::CQ, 3});
    struct Row { LemmaReport rep; long cases; };
    std::vector<Row> rows = {
        {check_lemma_2_4(g), 162},  {check_lemma_2_5(g), 966},
        {check_lemma_2_6(g), 966},  {check_lemma_2_7(g), 966},
        {check_lemma_2_8(g), 1701}, {check_lemma_2_9(g), 1345},
    };
    for (const auto& [rep, cases] : rows) {
        INFO(rep.lemma_id << " " << rep.witness);
        CHECK(rep.pass);
        CHECK(rep.cases == cases);
    }
}

TEST_CASE("section 2 lemmas also hold on Q3") {
    auto g = generate({CubeFamily::Q, 3});
    for (const auto& rep :
         {check_lemma_2_4(g), check_lemma_2_5(g), check_lemma_2_6(g),
          check_lemma_2_7(g), check_lemma_2_8(g), check_lemma_2_9(g)}) {
        INFO(rep.lemma_id << " " << rep.witness);
        CHECK(rep.pass);
    }
}

TEST_CASE("observations 2.1 and 3.1 separate CQ3 from Q3") {
    auto cq = generate({CubeFamily::CQ, 3});
    auto q = generate({CubeFamily::Q, 3});
    CHECK(check_obs_2_1(cq).pass);
    CHECK(check_obs_3_1(cq).pass);
    CHECK(!check_obs_2_1(q).pass);   // Q3 is planar, no K33 subdivision
    CHECK(!check_obs_3_1(q).pass);   // Q3 has three C4|C4 partitions
}

TEST_CASE("K4 fails lemma 2.4 with a witness") {
    CHECK_THROWS_AS(check_lemma_2_4(cycle(5)), std::invalid_argument);
    auto rep = check_lemma_2_4(complete(4));
    CHECK(!rep.pass);
    CHECK(!rep.witness.empty());
}

TEST_CASE("observation 4.1 on LTQ3") {
    auto rep = check_obs_4_1(generate({CubeFamily::LTQ, 3}));
    CHECK(rep.pass);
    CHECK(rep.cases == 16);
}

TEST_CASE("observations 4.2-4.4 on LTQ4") {
    auto g = generate({CubeFamily::LTQ, 4});
    auto r2 = check_obs_4_2(g);
    CHECK(r2.pass);
    CHECK(r2.cases == 24);
    auto r3 = check_obs_4_3(g);
    CHECK(r3.pass);
    CHECK(r3.cases == 8);
    auto r4 = check_obs_4_4(g);
    CHECK(r4.pass);
    CHECK(r4.cases == 4);
    CHECK(r4.notes.find("paths") != std::string::npos);
}
