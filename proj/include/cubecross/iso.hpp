// Isomorphism and automorphisms for small graphs: iterated degree
// refinement plus backtracking. Every returned mapping is re-verified
// edge by edge; no canonical form is computed.
#pragma once

#include <map>
#include <numeric>
#include <optional>

#include "cubecross/graph.hpp"

namespace cubecross {

using IsoMapping = std::vector<int>;  // vertex of g -> vertex of h

inline bool verify_mapping(const Graph& g, const Graph& h, const IsoMapping& f) {
    if (g.n() != h.n() || g.m() != h.m()) return false;
    if (static_cast<int>(f.size()) != g.n()) return false;
    std::vector<char> hit(h.n(), 0);
    for (int v : f) {
        if (v < 0 || v >= h.n() || hit[v]) return false;
        hit[v] = 1;
    }
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v) != h.has_edge(f[u], f[v])) return false;
    return true;
}

namespace detail {

// 1-dimensional refinement: color = (old color, multiset of neighbor colors),
// renumbered consistently for both graphs so colors are comparable.
inline std::pair<std::vector<int>, std::vector<int>>
joint_refine(const Graph& g, const Graph& h) {
    std::vector<int> cg(g.n(), 0), ch(h.n(), 0);
    for (int round = 0; round < g.n(); ++round) {
        std::map<std::pair<int, std::vector<int>>, int> dict;
        auto next = [&](const Graph& gr, const std::vector<int>& c, int v) {
            std::vector<int> nb;
            for (int w : gr.neighbors(v)) nb.push_back(c[w]);
            std::sort(nb.begin(), nb.end());
            auto key = std::make_pair(c[v], std::move(nb));
            auto [it, _] = dict.try_emplace(key, static_cast<int>(dict.size()));
            return it->second;
        };
        std::vector<int> ng(g.n()), nh(h.n());
        for (int v = 0; v < g.n(); ++v) ng[v] = next(g, cg, v);
        for (int v = 0; v < h.n(); ++v) nh[v] = next(h, ch, v);
        if (ng == cg && nh == ch) break;
        cg = std::move(ng);
        ch = std::move(nh);
    }
    return {cg, ch};
}

// Backtracking over color-compatible assignments. When collect_all is set,
// every isomorphism is reported through sink (return value says "aborted").
template <typename Sink>
inline bool iso_search(const Graph& g, const Graph& h, const std::vector<int>& cg,
                       const std::vector<int>& ch, bool collect_all, Sink&& sink) {
    int n = g.n();
    // map vertices in order of rarest color first
    std::map<int, int> color_freq;
    for (int c : cg) ++color_freq[c];
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::tuple(color_freq[cg[a]], cg[a], a) <
               std::tuple(color_freq[cg[b]], cg[b], b);
    });
    std::vector<int> f(n, -1), used(n, 0);
    auto rec = [&](auto&& self, int idx) -> bool {
        if (idx == n) return sink(f);
        int u = order[idx];
        for (int v = 0; v < n; ++v) {
            if (used[v] || ch[v] != cg[u]) continue;
            bool ok = true;
            for (int w : g.neighbors(u))
                if (f[w] >= 0 && !h.has_edge(v, f[w])) { ok = false; break; }
            if (ok) {
                // non-edges must map to non-edges: degree equality via colors
                // plus this count check keeps the pruning sound
                int mapped_nb = 0;
                for (int w : g.neighbors(u))
                    if (f[w] >= 0) ++mapped_nb;
                int mapped_nb_h = 0;
                for (int w : h.neighbors(v))
                    if (std::find(f.begin(), f.end(), w) != f.end()) ++mapped_nb_h;
                if (mapped_nb != mapped_nb_h) ok = false;
            }
            if (!ok) continue;
            f[u] = v;
            used[v] = 1;
            bool done = self(self, idx + 1);
            f[u] = -1;
            used[v] = 0;
            if (done && !collect_all) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace detail

/// Returns a verified isomorphism g -> h when one exists.
inline std::optional<IsoMapping> is_isomorphic(const Graph& g, const Graph& h) {
    if (g.n() != h.n() || g.m() != h.m()) return std::nullopt;
    auto [cg, ch] = detail::joint_refine(g, h);
    auto sg = cg, sh = ch;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return std::nullopt;
    std::optional<IsoMapping> found;
    detail::iso_search(g, h, cg, ch, false, [&](const IsoMapping& f) {
        if (verify_mapping(g, h, f)) { found = f; return true; }
        return false;
    });
    return found;
}

struct AutomorphismGroup {
    long order = 0;
    std::vector<IsoMapping> generators;
    std::vector<IsoMapping> elements;  // the full group (inputs are small)
};

/// Full automorphism group by exhaustive backtracking. Generators are a
/// minimal-by-construction subset whose closure is the whole group.
inline AutomorphismGroup automorphisms(const Graph& g) {
    AutomorphismGroup grp;
    auto [cg, ch] = detail::joint_refine(g, g);
    detail::iso_search(g, g, cg, ch, true, [&](const IsoMapping& f) {
        if (verify_mapping(g, g, f)) grp.elements.push_back(f);
        return false;
    });
    std::sort(grp.elements.begin(), grp.elements.end());
    grp.order = static_cast<long>(grp.elements.size());

    // greedy generating set: keep an element iff it grows the closure
    std::vector<IsoMapping> closure;
    IsoMapping id(g.n());
    std::iota(id.begin(), id.end(), 0);
    closure.push_back(id);
    auto contains = [&](const IsoMapping& f) {
        return std::find(closure.begin(), closure.end(), f) != closure.end();
    };
    auto compose = [&](const IsoMapping& a, const IsoMapping& b) {
        IsoMapping c(a.size());
        for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
        return c;
    };
    for (const auto& f : grp.elements) {
        if (contains(f)) continue;
        grp.generators.push_back(f);
        // rebuild closure with the new generator
        std::vector<IsoMapping> frontier = closure;
        closure.push_back(f);
        frontier.push_back(f);
        while (!frontier.empty()) {
            auto x = frontier.back();
            frontier.pop_back();
            for (const auto& gen : grp.generators) {
                auto y = compose(gen, x);
                if (!contains(y)) {
                    closure.push_back(y);
                    frontier.push_back(y);
                }
            }
        }
        if (static_cast<long>(closure.size()) == grp.order) break;
    }
    return grp;
}

}  // namespace cubecross
