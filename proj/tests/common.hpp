// Shared fixtures and the brute-force crossing oracle used to cross-check
// the branch-and-bound solver.
#pragma once

#include <functional>
#include <random>

#include "cubecross/drawing.hpp"
#include "cubecross/planarization.hpp"

namespace testing_support {

using namespace cubecross;

inline Graph complete(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({i, j});
    return Graph::make(n, es);
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<Edge> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.push_back({i, a + j});
    return Graph::make(a + b, es);
}

inline Graph cycle(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
    return Graph::make(n, es);
}

inline Graph petersen_minus_vertex() {
    // outer C5 0..4, inner pentagram 5..9, spokes; vertex 9 removed
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.push_back({i, (i + 1) % 5});
        es.push_back({i, 5 + i});
        es.push_back({5 + i, 5 + (i + 2) % 5});
    }
    std::vector<Edge> kept;
    for (auto [u, v] : es)
        if (u != 9 && v != 9) kept.push_back(u < v ? Edge{u, v} : Edge{v, u});
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    return Graph::make(9, kept);
}

// Exhaustive certificate search: does G admit a drawing with at most k
// crossings? Tries every set of <= k non-adjacent edge pairs and every
// per-edge crossing order.
inline bool naive_admits(const Graph& g, int k) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < g.m(); ++a)
        for (int b = a + 1; b < g.m(); ++b) {
            auto [u1, v1] = g.edges()[a];
            auto [u2, v2] = g.edges()[b];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) continue;
            pairs.push_back({a, b});
        }

    std::function<bool(const std::vector<std::pair<int, int>>&)> try_orders =
        [&](const std::vector<std::pair<int, int>>& chosen) {
            Planarization p;
            p.order.assign(g.m(), {});
            for (size_t i = 0; i < chosen.size(); ++i) {
                p.crossings.push_back({chosen[i].first, chosen[i].second});
                p.order[chosen[i].first].push_back(static_cast<int>(i));
                p.order[chosen[i].second].push_back(static_cast<int>(i));
            }
            // iterate permutations of each edge's crossing order
            std::vector<int> multi;
            for (int e = 0; e < g.m(); ++e)
                if (p.order[e].size() > 1) multi.push_back(e);
            std::function<bool(size_t)> rec = [&](size_t i) {
                if (i == multi.size()) return verify_certificate(g, p);
                auto& ord = p.order[multi[i]];
                std::sort(ord.begin(), ord.end());
                do {
                    if (rec(i + 1)) return true;
                } while (std::next_permutation(ord.begin(), ord.end()));
                return false;
            };
            return rec(0);
        };

    std::vector<std::pair<int, int>> chosen;
    std::function<bool(size_t, int)> pick = [&](size_t from, int left) {
        if (try_orders(chosen)) return true;
        if (left == 0) return false;
        for (size_t i = from; i < pairs.size(); ++i) {
            chosen.push_back(pairs[i]);
            if (pick(i + 1, left - 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return pick(0, k);
}

// random straight-line drawing in general position (retries until clean)
inline PolylineDrawing random_drawing(const Graph& g, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> coord(0, 1'000'000);
    for (int attempt = 0; attempt < 64; ++attempt) {
        PolylineDrawing d;
        d.graph = g;
        for (int v = 0; v < g.n(); ++v)
            d.pos.push_back({Rat(coord(rng)), Rat(coord(rng))});
        d.bends.assign(g.m(), {});
        try {
            check_drawing(d);
            if (validate_good(d).good()) return d;
        } catch (const GeometryError&) {
        }
    }
    throw std::runtime_error("no good random drawing found");
}

}  // namespace testing_support
