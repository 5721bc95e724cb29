// Turns a verified crossing certificate into a concrete straight-line-ish
// polyline drawing: embed the planar host on an integer grid, then nudge
// edges near each dummy vertex so the two polylines cross transversally.
#pragma once

#include "cubecross/arrangement.hpp"
#include "cubecross/planarization.hpp"

#include <boost/graph/chrobak_payne_drawing.hpp>
#include <boost/graph/make_biconnected_planar.hpp>
#include <boost/graph/make_connected.hpp>
#include <boost/graph/make_maximal_planar.hpp>
#include <boost/graph/planar_canonical_ordering.hpp>

namespace cubecross {

namespace detail {

// integer grid coordinates for every host vertex
inline std::vector<Pt> grid_embed(const Graph& host) {
    using namespace boost;
    auto bg = to_boost(host);
    using EdgeDesc = graph_traits<BoostGraph>::edge_descriptor;

    auto reindex = [&]() {
        int idx = 0;
        for (auto [it, end] = edges(bg); it != end; ++it)
            put(get(edge_index, bg), *it, idx++);
    };
    auto embed = [&](std::vector<std::vector<EdgeDesc>>& storage) {
        storage.assign(num_vertices(bg), {});
        auto emb = make_iterator_property_map(storage.begin(),
                                              get(vertex_index, bg));
        if (!boyer_myrvold_planarity_test(boyer_myrvold_params::graph = bg,
                                          boyer_myrvold_params::embedding = emb))
            throw std::invalid_argument("host graph is not planar");
        return emb;
    };

    std::vector<std::vector<EdgeDesc>> storage;
    make_connected(bg);
    reindex();
    {
        auto emb = embed(storage);
        make_biconnected_planar(bg, emb);
    }
    reindex();
    {
        auto emb = embed(storage);
        make_maximal_planar(bg, emb);
    }
    reindex();
    auto emb = embed(storage);
    std::vector<graph_traits<BoostGraph>::vertex_descriptor> ordering;
    planar_canonical_ordering(bg, emb, std::back_inserter(ordering));

    struct Coord { std::size_t x = 0, y = 0; };
    std::vector<Coord> coords(num_vertices(bg));
    auto drawing = make_iterator_property_map(coords.begin(),
                                              get(vertex_index, bg));
    chrobak_payne_straight_line_drawing(bg, emb, ordering.begin(),
                                        ordering.end(), drawing,
                                        get(vertex_index, bg));
    std::vector<Pt> out(host.n());
    for (int v = 0; v < host.n(); ++v)
        out[v] = {Rat(static_cast<long>(coords[v].x)),
                  Rat(static_cast<long>(coords[v].y))};
    return out;
}

inline bool collinear(const Pt& a, const Pt& b, const Pt& c) {
    return orient(a, b, c) == 0;
}

}  // namespace detail

/// Realizes a planar-host certificate as a good polyline drawing whose
/// crossings are exactly the certificate's (a removable crossing, where
/// the embedding does not alternate at the dummy, is dropped).
inline PolylineDrawing realize_drawing(const Graph& base, Planarization p) {
    for (int pass = 0;; ++pass) {
        if (pass > static_cast<int>(p.crossings.size()) + 4)
            throw std::logic_error("drawing realization failed to converge");
        auto host = build_host(base, p);
        auto grid = detail::grid_embed(host.graph);
        int n = base.n();

        // per dummy: the four branch points, grouped by base edge
        int removable = -1;
        for (size_t ci = 0; ci < p.crossings.size() && removable < 0; ++ci) {
            int d = n + static_cast<int>(ci);
            std::vector<std::pair<Pt, int>> dirs;  // (neighbor point, base edge)
            for (int w : host.graph.neighbors(d)) {
                int he = host.graph.edge_index(d, w);
                dirs.push_back({grid[w], host.origin[he]});
            }
            std::sort(dirs.begin(), dirs.end(), [&](const auto& a, const auto& b) {
                return detail::angle_less(a.first - grid[d], b.first - grid[d]);
            });
            if (dirs[0].second == dirs[1].second ||
                dirs[1].second == dirs[2].second)
                removable = static_cast<int>(ci);
        }
        if (removable >= 0) {
            // the two edges only touch there; the crossing can be undone
            p.crossings.erase(p.crossings.begin() + removable);
            for (auto& ord : p.order) {
                std::erase(ord, removable);
                for (int& ci : ord)
                    if (ci > removable) --ci;
            }
            continue;
        }

        // chain of host vertices along each base edge
        std::vector<std::vector<int>> chain(base.m());
        for (int e = 0; e < base.m(); ++e) {
            chain[e].push_back(base.edges()[e].first);
            for (int ci : p.order[e]) chain[e].push_back(n + ci);
            chain[e].push_back(base.edges()[e].second);
        }
        auto around = [&](int e, int d) {  // neighbors of dummy d along e
            const auto& c = chain[e];
            for (size_t i = 1; i + 1 < c.size(); ++i)
                if (c[i] == d) return std::pair(c[i - 1], c[i + 1]);
            throw std::logic_error("dummy not on its edge chain");
        };

        // shrink the detour until the drawing validates
        for (Rat delta(1, 4); delta > Rat(1, 1 << 24); delta /= 4) {
            PolylineDrawing d;
            d.graph = base;
            d.pos.assign(grid.begin(), grid.begin() + n);
            d.bends.assign(base.m(), {});
            // per edge, bend points at dummies, possibly replaced by a detour
            std::vector<std::map<int, std::vector<Pt>>> route(base.m());
            for (size_t ci = 0; ci < p.crossings.size(); ++ci) {
                int dummy = n + static_cast<int>(ci);
                int e1 = p.crossings[ci].e1, e2 = p.crossings[ci].e2;
                auto [a1, b1] = around(e1, dummy);
                auto [a2, b2] = around(e2, dummy);
                Pt dp = grid[dummy];
                bool s1 = detail::collinear(grid[a1], dp, grid[b1]);
                bool s2 = detail::collinear(grid[a2], dp, grid[b2]);
                if (s1 && s2) {
                    // both pass straight through: drop both bends, the
                    // crossing happens in the segment interiors
                    route[e1][dummy] = {};
                    route[e2][dummy] = {};
                } else {
                    // detour the turning edge just short of the dummy
                    int et = s1 ? e2 : e1;
                    int es = s1 ? e1 : e2;
                    auto [at, bt] = around(et, dummy);
                    Pt p1 = dp + Pt{(grid[at].x - dp.x) * delta,
                                    (grid[at].y - dp.y) * delta};
                    Pt p2 = dp + Pt{(grid[bt].x - dp.x) * delta,
                                    (grid[bt].y - dp.y) * delta};
                    route[et][dummy] = {p1, p2};
                    if (s1 != s2) route[es][dummy] = {};  // straight one merges
                    else route[es][dummy] = {dp};         // other keeps its bend
                }
            }
            for (int e = 0; e < base.m(); ++e)
                for (size_t i = 1; i + 1 < chain[e].size(); ++i) {
                    int dummy = chain[e][i];
                    auto it = route[e].find(dummy);
                    if (it != route[e].end())
                        for (const auto& q : it->second) d.bends[e].push_back(q);
                    else
                        d.bends[e].push_back(grid[dummy]);
                }
            try {
                check_drawing(d);
                if (!validate_good(d).good()) continue;
                if (crossing_count(d) !=
                    static_cast<int>(p.crossings.size()))
                    continue;
                return d;
            } catch (const GeometryError&) {
                continue;
            }
        }
        throw std::logic_error("drawing realization failed to converge");
    }
}

}  // namespace cubecross
