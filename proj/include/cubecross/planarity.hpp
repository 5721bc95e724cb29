// Planarity testing behind a fixed contract: a combinatorial embedding on
// success, a structurally verified Kuratowski subdivision on failure.
// The test itself is Boyer-Myrvold (boost::graph).
#pragma once

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

#include <optional>
#include <set>

#include "cubecross/graph.hpp"

namespace cubecross {

struct KuratowskiWitness {
    enum Kind { K5, K33 } kind = K5;
    std::vector<int> branch;               // 5 or 6 branch vertices
    std::vector<std::vector<int>> paths;   // branch .. internals .. branch
};

struct PlanarityResult {
    bool planar = false;
    std::vector<std::vector<int>> embedding;  // rotation system, per vertex
    std::optional<KuratowskiWitness> witness;
};

/// Structural re-validation: paths internally disjoint, edges present,
/// contraction yields exactly K5 or K33.
inline bool verify_witness(const Graph& g, const KuratowskiWitness& w) {
    int b = static_cast<int>(w.branch.size());
    if (w.kind == KuratowskiWitness::K5 && b != 5) return false;
    if (w.kind == KuratowskiWitness::K33 && b != 6) return false;
    std::set<int> branch_set(w.branch.begin(), w.branch.end());
    if (static_cast<int>(branch_set.size()) != b) return false;

    std::set<int> internals;
    std::set<Edge> used_edges;
    std::set<std::pair<int, int>> contracted;
    for (const auto& p : w.paths) {
        if (p.size() < 2) return false;
        if (!branch_set.count(p.front()) || !branch_set.count(p.back())) return false;
        for (size_t i = 0; i + 1 < p.size(); ++i) {
            if (!g.has_edge(p[i], p[i + 1])) return false;
            Edge e{std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1])};
            if (!used_edges.insert(e).second) return false;  // edge reused
        }
        for (size_t i = 1; i + 1 < p.size(); ++i) {
            if (branch_set.count(p[i])) return false;
            if (!internals.insert(p[i]).second) return false;  // internally disjoint
        }
        int a = p.front(), c = p.back();
        if (a == c) return false;
        if (!contracted.insert({std::min(a, c), std::max(a, c)}).second)
            return false;  // parallel path between same branch pair
    }
    for (int v : internals)
        if (branch_set.count(v)) return false;

    if (w.kind == KuratowskiWitness::K5) {
        if (contracted.size() != 10) return false;  // all C(5,2) pairs
        return true;
    }
    // K33: contracted graph must be bipartite-complete on a 3+3 split
    if (contracted.size() != 9) return false;
    // the split: neighbors of branch[0] form the other side
    std::set<int> side_b;
    for (auto [a, c] : contracted) {
        if (a == w.branch[0]) side_b.insert(c);
        if (c == w.branch[0]) side_b.insert(a);
    }
    if (side_b.size() != 3) return false;
    std::set<int> side_a;
    for (int v : w.branch)
        if (!side_b.count(v)) side_a.insert(v);
    if (side_a.size() != 3) return false;
    for (int u : side_a)
        for (int v : side_b)
            if (!contracted.count({std::min(u, v), std::max(u, v)})) return false;
    return true;
}

namespace detail {

using BoostGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::undirectedS,
    boost::property<boost::vertex_index_t, int>,
    boost::property<boost::edge_index_t, int>>;

inline BoostGraph to_boost(const Graph& g) {
    BoostGraph bg(g.n());
    int ei = 0;
    for (auto [u, v] : g.edges())
        boost::add_edge(u, v, ei++, bg);
    return bg;
}

// Turn a Kuratowski edge set into branch vertices plus subdivision paths.
inline bool edges_nonplanar(int n, const std::vector<Edge>& es) {
    BoostGraph bg(n);
    int ei = 0;
    for (auto [u, v] : es) boost::add_edge(u, v, ei++, bg);
    return !boost::boyer_myrvold_planarity_test(bg);
}

inline std::optional<KuratowskiWitness>
witness_from_edges(const Graph& g, std::vector<Edge> kedges) {
    // the reported edge set may be larger than one subdivision; shrink it
    // to an edge-minimal non-planar subgraph, which is exactly one
    for (size_t i = 0; i < kedges.size();) {
        std::vector<Edge> rest = kedges;
        rest.erase(rest.begin() + i);
        if (edges_nonplanar(g.n(), rest))
            kedges = std::move(rest);
        else
            ++i;
    }
    // iteratively strip degree-<=1 vertices
    for (;;) {
        std::vector<int> deg(g.n(), 0);
        for (auto [u, v] : kedges) { ++deg[u]; ++deg[v]; }
        auto it = std::remove_if(kedges.begin(), kedges.end(), [&](const Edge& e) {
            return deg[e.first] <= 1 || deg[e.second] <= 1;
        });
        if (it == kedges.end()) break;
        kedges.erase(it, kedges.end());
    }
    std::vector<std::vector<int>> adj(g.n());
    for (auto [u, v] : kedges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> branch;
    for (int v = 0; v < g.n(); ++v)
        if (adj[v].size() >= 3) branch.push_back(v);
    KuratowskiWitness w;
    if (branch.size() == 5) w.kind = KuratowskiWitness::K5;
    else if (branch.size() == 6) w.kind = KuratowskiWitness::K33;
    else return std::nullopt;
    w.branch = branch;
    std::set<int> bset(branch.begin(), branch.end());
    std::set<std::pair<Edge, int>> walked;  // (first edge, direction tag)
    for (int b : branch) {
        for (int start : adj[b]) {
            std::vector<int> path{b, start};
            int prev = b, cur = start;
            while (!bset.count(cur)) {
                int nxt = -1;
                for (int x : adj[cur])
                    if (x != prev) nxt = x;
                if (nxt < 0) return std::nullopt;
                prev = cur;
                cur = nxt;
                path.push_back(cur);
            }
            if (path.front() > path.back()) continue;  // keep one direction
            if (path.front() == path.back() && path[1] > path[path.size() - 2])
                continue;
            w.paths.push_back(path);
        }
    }
    if (!verify_witness(g, w)) return std::nullopt;
    return w;
}

}  // namespace detail

/// Planarity with a rotation system on success and a verified Kuratowski
/// witness on failure.
inline PlanarityResult is_planar(const Graph& g) {
    using namespace boost;
    auto bg = detail::to_boost(g);
    using EdgeDesc = graph_traits<detail::BoostGraph>::edge_descriptor;
    std::vector<std::vector<EdgeDesc>> embedding_storage(g.n());
    auto embedding = make_iterator_property_map(embedding_storage.begin(),
                                                get(vertex_index, bg));
    std::vector<EdgeDesc> kuratowski;
    bool planar = boyer_myrvold_planarity_test(
        boyer_myrvold_params::graph = bg,
        boyer_myrvold_params::embedding = embedding,
        boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
    PlanarityResult res;
    res.planar = planar;
    if (planar) {
        res.embedding.resize(g.n());
        for (int v = 0; v < g.n(); ++v)
            for (const auto& e : embedding_storage[v]) {
                int s = static_cast<int>(source(e, bg));
                int t = static_cast<int>(target(e, bg));
                res.embedding[v].push_back(s == v ? t : s);
            }
    } else {
        std::vector<Edge> kedges;
        for (const auto& e : kuratowski) {
            int s = static_cast<int>(source(e, bg));
            int t = static_cast<int>(target(e, bg));
            kedges.push_back({std::min(s, t), std::max(s, t)});
        }
        std::sort(kedges.begin(), kedges.end());
        kedges.erase(std::unique(kedges.begin(), kedges.end()), kedges.end());
        auto w = detail::witness_from_edges(g, std::move(kedges));
        if (!w) throw std::runtime_error("failed to extract Kuratowski witness");
        res.witness = std::move(w);
    }
    return res;
}

/// Fast planar/nonplanar answer without embedding or witness extraction.
inline bool is_planar_quick(const Graph& g) {
    auto bg = detail::to_boost(g);
    return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace cubecross
