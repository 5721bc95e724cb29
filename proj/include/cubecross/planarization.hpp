// Combinatorial crossing certificates. A certificate lists which edge
// pairs cross and in what order each edge meets its crossings; replacing
// every crossing by a degree-4 dummy vertex yields the host graph, and the
// certificate is realizable exactly when the host is planar.
#pragma once

#include <numeric>
#include <set>

#include "cubecross/planarity.hpp"

namespace cubecross {

struct Crossing {
    int e1 = 0, e2 = 0;  // base edge indices, e1 < e2

    bool operator==(const Crossing&) const = default;
    auto operator<=>(const Crossing&) const = default;
};

struct Planarization {
    std::vector<Crossing> crossings;
    // order[e]: crossing indices met along edge e, from endpoint
    // edges()[e].first towards edges()[e].second
    std::vector<std::vector<int>> order;
};

struct HostGraph {
    Graph graph;              // dummy for crossing i is vertex base.n() + i
    std::vector<int> origin;  // host edge -> base edge
    std::vector<int> gap;     // host edge -> gap index along its base edge
};

/// Structural validity: edges in range, pairs non-adjacent, no pair listed
/// twice, order lists consistent with the crossing list.
inline void validate_certificate(const Graph& base, const Planarization& p) {
    std::set<std::pair<int, int>> seen;
    for (const auto& c : p.crossings) {
        if (c.e1 < 0 || c.e2 >= base.m() || c.e1 >= c.e2)
            throw std::invalid_argument("bad crossing edge pair");
        auto [a, b] = base.edges()[c.e1];
        auto [x, y] = base.edges()[c.e2];
        if (a == x || a == y || b == x || b == y)
            throw std::invalid_argument("adjacent edges may not cross");
        if (!seen.insert({c.e1, c.e2}).second)
            throw std::invalid_argument("edge pair crosses twice");
    }
    if (static_cast<int>(p.order.size()) != base.m())
        throw std::invalid_argument("order list size mismatch");
    std::vector<int> uses(p.crossings.size(), 0);
    for (int e = 0; e < base.m(); ++e) {
        for (int ci : p.order[e]) {
            if (ci < 0 || ci >= static_cast<int>(p.crossings.size()))
                throw std::invalid_argument("order references unknown crossing");
            if (p.crossings[ci].e1 != e && p.crossings[ci].e2 != e)
                throw std::invalid_argument("crossing listed on wrong edge");
            ++uses[ci];
        }
    }
    for (int u : uses)
        if (u != 2) throw std::invalid_argument("crossing must appear on both edges");
}

inline HostGraph build_host(const Graph& base, const Planarization& p) {
    validate_certificate(base, p);
    int n = base.n();
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> slot;  // parallel to edges: (origin, gap)
    for (int e = 0; e < base.m(); ++e) {
        int prev = base.edges()[e].first;
        int pos = 0;
        for (int ci : p.order[e]) {
            edges.push_back({prev, n + ci});
            slot.push_back({e, pos++});
            prev = n + ci;
        }
        edges.push_back({prev, base.edges()[e].second});
        slot.push_back({e, pos});
    }
    HostGraph host{Graph::make(n + static_cast<int>(p.crossings.size()), edges),
                   {}, {}};
    // the graph reorders its edge list; realign the slot annotations
    host.origin.resize(edges.size());
    host.gap.resize(edges.size());
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        int he = host.graph.edge_index(u, v);
        host.origin[he] = slot[i].first;
        host.gap[he] = slot[i].second;
    }
    return host;
}

/// A certificate verifies when its host graph is planar: the planar
/// embedding can then be realized as a drawing with exactly the listed
/// crossings.
inline bool verify_certificate(const Graph& base, const Planarization& p) {
    auto host = build_host(base, p);
    return is_planar_quick(host.graph);
}

/// Canonical state key for certificate sets: crossing pairs sorted, orders
/// rewritten as partner-edge sequences.
inline std::string canonical_key(const Graph& base, const Planarization& p) {
    std::vector<int> idx(p.crossings.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return p.crossings[a] < p.crossings[b];
    });
    std::vector<int> rank(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) rank[idx[i]] = static_cast<int>(i);
    std::string key;
    for (int i : idx)
        key += std::to_string(p.crossings[i].e1) + "x" +
               std::to_string(p.crossings[i].e2) + ";";
    key += "|";
    for (int e = 0; e < base.m(); ++e) {
        if (p.order[e].empty()) continue;
        key += std::to_string(e) + ":";
        for (int ci : p.order[e]) key += std::to_string(rank[ci]) + ",";
        key += ";";
    }
    return key;
}

}  // namespace cubecross
