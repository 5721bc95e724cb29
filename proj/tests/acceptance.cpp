// Acceptance gate: one line per criterion, exit 0 iff all pass.
// Criterion 6 is budgeted best-effort; its budget comes from
// CUBECROSS_ACCEPT_BUDGET (same syntax as the CLI --budget flag) and an
// exhausted budget degrades it to the certified bracket, reported here.
#include <chrono>
#include <iostream>
#include <sstream>

#include "common.hpp"
#include "cubecross/cubes.hpp"
#include "cubecross/io.hpp"
#include "cubecross/iso.hpp"
#include "cubecross/lemmas.hpp"
#include "cubecross/realize.hpp"
#include "cubecross/solver.hpp"

using namespace cubecross;
using namespace testing_support;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

Outcome criterion1() {
    for (int n = 1; n <= 5; ++n) {
        std::vector<CubeSpec> specs = {{CubeFamily::Q, n},
                                       {CubeFamily::CQ, n},
                                       {CubeFamily::MQ, n, 0},
                                       {CubeFamily::MQ, n, 1}};
        if (n >= 2) specs.push_back({CubeFamily::LTQ, n});
        for (const auto& s : specs) {
            auto g = generate(s);
            if (g.n() != (1 << n) || g.m() != n * (1 << (n - 1)) ||
                !g.is_regular(n) || !g.is_connected())
                return {false, family_name(s) + " malformed"};
        }
    }
    return {true, "all families, n <= 5: 2^n vertices, n*2^(n-1) edges, "
                  "n-regular, connected"};
}

Outcome criterion2() {
    auto cq3 = generate({CubeFamily::CQ, 3});
    auto ltq3 = generate({CubeFamily::LTQ, 3});
    auto mq30 = generate({CubeFamily::MQ, 3, 0});
    auto mq31 = generate({CubeFamily::MQ, 3, 1});
    auto ltq4 = generate({CubeFamily::LTQ, 4});
    auto mq40 = generate({CubeFamily::MQ, 4, 0});
    auto cq4 = generate({CubeFamily::CQ, 4});
    struct Pair { const Graph *a, *b; const char* name; };
    for (const auto& [a, b, name] :
         {Pair{&cq3, &ltq3, "CQ3~LTQ3"}, Pair{&cq3, &mq30, "CQ3~0MQ3"},
          Pair{&cq3, &mq31, "CQ3~1MQ3"}, Pair{&mq40, &ltq4, "0MQ4~LTQ4"}}) {
        auto m = is_isomorphic(*a, *b);
        if (!m || !verify_mapping(*a, *b, *m))
            return {false, std::string(name) + " failed"};
    }
    if (is_isomorphic(cq4, ltq4)) return {false, "CQ4 ~ LTQ4 unexpectedly"};
    return {true, "verified mappings for the order-3 coincidences and "
                  "0MQ4~LTQ4; CQ4 !~ LTQ4"};
}

Outcome criterion3() {
    auto cq3 = generate({CubeFamily::CQ, 3});
    for (const auto& rep :
         {check_lemma_2_4(cq3), check_lemma_2_5(cq3), check_lemma_2_6(cq3),
          check_lemma_2_7(cq3), check_lemma_2_8(cq3), check_lemma_2_9(cq3),
          check_obs_2_1(cq3), check_obs_3_1(cq3)})
        if (!rep.pass) return {false, rep.lemma_id + " failed: " + rep.witness};
    auto ltq3 = generate({CubeFamily::LTQ, 3});
    auto ltq4 = generate({CubeFamily::LTQ, 4});
    for (const auto& rep : {check_obs_4_1(ltq3), check_obs_4_2(ltq4),
                            check_obs_4_3(ltq4), check_obs_4_4(ltq4)})
        if (!rep.pass) return {false, rep.lemma_id + " failed: " + rep.witness};
    auto neg = check_lemma_2_4(complete(4));
    if (neg.pass || neg.witness.empty())
        return {false, "K4 negative control did not produce a witness"};
    return {true, "lemmas 2.4-2.9, obs 2.1/3.1 on CQ3; obs 4.1-4.4 on "
                  "LTQ3/LTQ4; K4 control fails with witness: " + neg.witness};
}

Outcome criterion4() {
    std::vector<std::pair<CubeSpec, int>> rows = {
        {{CubeFamily::Q, 1}, 0},      {{CubeFamily::Q, 2}, 0},
        {{CubeFamily::Q, 3}, 0},      {{CubeFamily::CQ, 1}, 0},
        {{CubeFamily::CQ, 2}, 0},     {{CubeFamily::LTQ, 2}, 0},
        {{CubeFamily::MQ, 1, 0}, 0},  {{CubeFamily::MQ, 1, 1}, 0},
        {{CubeFamily::MQ, 2, 0}, 0},  {{CubeFamily::MQ, 2, 1}, 0},
        {{CubeFamily::CQ, 3}, 1},     {{CubeFamily::LTQ, 3}, 1},
        {{CubeFamily::MQ, 3, 0}, 1},  {{CubeFamily::MQ, 3, 1}, 1},
    };
    for (const auto& [spec, want] : rows) {
        auto r = crossing_number(generate(spec));
        if (!r.exact || r.upper != want)
            return {false, family_name(spec) + ": got [" +
                               std::to_string(r.lower) + "," +
                               std::to_string(r.upper) + "], want " +
                               std::to_string(want)};
    }
    return {true, "table values 0 and 1 reproduced exactly for all "
                  "order <= 3 cases"};
}

Outcome criterion5() {
    struct Row { CubeSpec spec; int target; };
    std::string detail;
    for (const auto& [spec, target] :
         {Row{{CubeFamily::Q, 4}, 8}, Row{{CubeFamily::CQ, 4}, 8},
          Row{{CubeFamily::LTQ, 4}, 10}, Row{{CubeFamily::MQ, 4, 0}, 10},
          Row{{CubeFamily::MQ, 4, 1}, 10}}) {
        auto g = generate(spec);
        auto ub = cr_upper_bound(g, 1, 256, target);
        std::string name = family_name(spec);
        if (ub.crossings > target)
            return {false, name + ": " + std::to_string(ub.crossings) + " > " +
                               std::to_string(target)};
        auto d = realize_drawing(g, ub.certificate);
        if (!validate_good(d).good() || crossing_count(d) != ub.crossings)
            return {false, name + ": realized drawing mismatch"};
        detail += name + "=" + std::to_string(ub.crossings) + " ";
    }
    return {true, detail + "(all drawings good with the claimed counts)"};
}

Outcome criterion6() {
    const char* env = std::getenv("CUBECROSS_ACCEPT_BUDGET");
    std::string budget_str = env ? env : "30s";
    Budget budget;
    if (budget_str.back() == 's')
        budget.max_seconds = std::stod(budget_str.substr(0, budget_str.size() - 1));
    else
        budget.max_nodes = std::stol(budget_str);

    struct Row { CubeSpec spec; int paper; };
    std::ostringstream detail;
    detail << "budget " << budget_str << " per instance: ";
    bool all_exact = true;
    for (const auto& [spec, paper] :
         {Row{{CubeFamily::Q, 4}, 8}, Row{{CubeFamily::CQ, 4}, 8},
          Row{{CubeFamily::LTQ, 4}, 10}, Row{{CubeFamily::MQ, 4, 0}, 10},
          Row{{CubeFamily::MQ, 4, 1}, 10}}) {
        auto g = generate(spec);
        auto r = crossing_number(g, budget, 1, 256);
        std::string name = family_name(spec);
        if (r.upper > paper)
            return {false, name + " upper bound " + std::to_string(r.upper) +
                               " exceeds the published " +
                               std::to_string(paper)};
        if (r.exact && r.upper != paper)
            return {false, name + " closed at " + std::to_string(r.upper) +
                               ", contradicting the published " +
                               std::to_string(paper)};
        if (r.exact) {
            detail << name << "=" << r.upper << " (closed) ";
        } else {
            all_exact = false;
            detail << name << " in [" << r.lower << "," << r.upper << "] ";
        }
    }
    if (!all_exact)
        detail << "-- SHORTFALL: budget exhausted before closing the "
                  "bracket, certified bounds reported instead";
    return {true, detail.str()};
}

Outcome criterion7() {
    std::vector<std::pair<std::string, Graph>> fixtures = {
        {"Q3", generate({CubeFamily::Q, 3})},
        {"CQ3", generate({CubeFamily::CQ, 3})},
        {"LTQ3", generate({CubeFamily::LTQ, 3})},
        {"0MQ3", generate({CubeFamily::MQ, 3, 0})},
        {"1MQ3", generate({CubeFamily::MQ, 3, 1})},
        {"K5", complete(5)},
        {"K33", complete_bipartite(3, 3)},
        {"Petersen-v", petersen_minus_vertex()},
    };
    long checks = 0;
    for (const auto& [name, g] : fixtures)
        for (int k = 0; k <= 3; ++k) {
            bool oracle = naive_admits(g, k);
            auto dec = cr_decide(g, k);
            if (dec.status == Tri::Unknown ||
                (dec.status == Tri::Yes) != oracle)
                return {false, name + " k=" + std::to_string(k) +
                                   ": solver disagrees with the oracle"};
            ++checks;
        }
    return {true, std::to_string(checks) +
                      " solver/oracle comparisons agree (8 fixtures, k <= 3)"};
}

Outcome criterion8() {
    // equation (2) over all subsets of every 3-regular fixture
    for (const Graph& g : {generate({CubeFamily::Q, 3}),
                           generate({CubeFamily::CQ, 3}),
                           generate({CubeFamily::LTQ, 3}),
                           generate({CubeFamily::MQ, 3, 0}),
                           generate({CubeFamily::MQ, 3, 1}),
                           complete_bipartite(3, 3)}) {
        for (std::uint32_t mask = 1; mask + 1 < (1u << g.n()); ++mask) {
            auto x = VertexSubset::from_mask(mask, g.n());
            if (boundary_and_counts(g, x, x.complement(g)).count !=
                3 * static_cast<int>(x.verts.size()) -
                    2 * internal_edge_count(g, x))
                return {false, "equation (2) violated"};
        }
    }
    // nu additivity on 100 random drawings and partitions
    std::mt19937 rng(3);
    int done = 0;
    for (unsigned seed = 0; done < 100 && seed < 4000; ++seed) {
        int n = 5 + static_cast<int>(rng() % 4);
        std::vector<Edge> es;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) es.push_back({i, j});
        if (es.size() < 2) continue;
        auto g = Graph::make(n, es);
        PolylineDrawing d;
        try {
            d = random_drawing(g, seed * 977 + 13);
        } catch (const std::runtime_error&) {
            continue;
        }
        int blocks = 2 + static_cast<int>(rng() % 2);
        std::vector<std::vector<int>> parts(blocks);
        for (int e = 0; e < g.m(); ++e) parts[rng() % blocks].push_back(e);
        bool skip = false;
        for (const auto& pb : parts) skip |= pb.empty();
        if (skip) continue;
        auto np = nu_partition(d, parts);
        int sum = 0;
        for (const auto& row : np.matrix)
            for (int v : row) sum += v;
        if (sum != np.total || np.total != crossing_count(d))
            return {false, "nu additivity violated at seed " +
                               std::to_string(seed)};
        if (!cycle_parity_check(d).pass)
            return {false, "cycle parity violated at seed " +
                               std::to_string(seed)};
        ++done;
    }
    if (done < 100) return {false, "could not build 100 random drawings"};
    // arrangement Euler identity and parity on solver-produced drawings
    for (const auto& spec :
         {CubeSpec{CubeFamily::CQ, 3}, CubeSpec{CubeFamily::CQ, 4},
          CubeSpec{CubeFamily::LTQ, 4}}) {
        auto g = generate(spec);
        auto ub = cr_upper_bound(g, 1, 256);
        auto d = realize_drawing(g, ub.certificate);
        if (!validate_good(d).good()) return {false, "realized drawing not good"};
        auto arr = arrangement(d);
        if (arr.num_nodes - static_cast<int>(arr.arcs.size()) +
                static_cast<int>(arr.faces.size()) != 2)
            return {false, "arrangement Euler identity violated"};
        if (!cycle_parity_check(d).pass)
            return {false, "cycle parity violated on a realized drawing"};
    }
    // isomorphism invariance of crossing_number
    auto cq3 = generate({CubeFamily::CQ, 3});
    std::mt19937 prng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> perm(cq3.n());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), prng);
        std::vector<Edge> es;
        for (auto [u, v] : cq3.edges())
            es.push_back({std::min(perm[u], perm[v]), std::max(perm[u], perm[v])});
        auto r = crossing_number(Graph::make(cq3.n(), es));
        if (!r.exact || r.upper != 1)
            return {false, "crossing number not invariant under relabeling"};
    }
    return {true, "equation (2) exhaustively; nu additivity and parity on "
                  "100 random drawings; Euler identity on realized "
                  "drawings; 20 relabelings invariant"};
}

}  // namespace

int main() {
    struct Crit { int id; Outcome (*fn)(); };
    const Crit crits[] = {{1, criterion1}, {2, criterion2}, {3, criterion3},
                          {4, criterion4}, {5, criterion5}, {6, criterion6},
                          {7, criterion7}, {8, criterion8}};
    bool all = true;
    for (const auto& c : crits) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.fn();
        } catch (const std::exception& ex) {
            o = {false, std::string("exception: ") + ex.what()};
        }
        all &= o.pass;
        std::ostringstream secs;
        secs.setf(std::ios::fixed);
        secs.precision(1);
        secs << seconds_since(t0);
        std::cout << "criterion " << c.id << ": "
                  << (o.pass ? "PASS" : "FAIL") << " [" << secs.str()
                  << "s] " << o.detail << "\n";
    }
    return all ? 0 : 1;
}
