// Generators for the hypercube family: Q_n, crossed cube CQ_n, locally
// twisted cube LTQ_n and the two Mobius cubes. Labels keep each family's
// native bit convention: CQ labels read x_n..x_1 (rightmost bit is x_1),
// LTQ/MQ labels read x_1..x_n (leftmost bit is x_1). Vertex index equals
// the label interpreted as a binary number as printed.
#pragma once

#include <set>
#include <string>

#include "cubecross/graph.hpp"
#include "cubecross/iso.hpp"

namespace cubecross {

enum class CubeFamily { Q, CQ, LTQ, MQ };

struct CubeSpec {
    CubeFamily family = CubeFamily::Q;
    int order = 1;
    int variant = 0;  // MQ only: the assumed value of x0

    void validate() const {
        if (order < 1) throw std::invalid_argument("order must be >= 1");
        if (family == CubeFamily::LTQ && order < 2)
            throw std::invalid_argument("LTQ requires order >= 2");
        if (variant != 0 && variant != 1)
            throw std::invalid_argument("variant must be 0 or 1");
    }
};

inline std::string family_name(const CubeSpec& s) {
    switch (s.family) {
        case CubeFamily::Q: return "Q" + std::to_string(s.order);
        case CubeFamily::CQ: return "CQ" + std::to_string(s.order);
        case CubeFamily::LTQ: return "LTQ" + std::to_string(s.order);
        case CubeFamily::MQ:
            return std::to_string(s.variant) + "-MQ" + std::to_string(s.order);
    }
    return "?";
}

/// The pair-related relation on 2-bit strings:
/// {(00,00), (10,10), (01,11), (11,01)}.
inline bool pair_related(const std::string& x, const std::string& y) {
    if (x.size() != 2 || y.size() != 2)
        throw std::invalid_argument("pair_related needs 2-bit strings");
    return (x == "00" && y == "00") || (x == "10" && y == "10") ||
           (x == "01" && y == "11") || (x == "11" && y == "01");
}

namespace detail {

inline std::string bits_of(int v, int n) {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
        if (v >> (n - 1 - i) & 1) s[i] = '1';
    return s;
}

// Crossed-cube adjacency on labels x_n..x_1 (string index 0 holds x_n).
// The differing position j is the highest differing bit; below it every
// 2-bit block x_{2i}x_{2i-1} with 2i < j must be pair-related, and for
// even j additionally x_{j-1} = y_{j-1}.
inline bool cq_adjacent(const std::string& x, const std::string& y, int n) {
    auto at = [&](const std::string& s, int j) { return s[n - j]; };  // x_j
    int j = 0;  // highest differing position
    for (int p = n; p >= 1; --p)
        if (at(x, p) != at(y, p)) { j = p; break; }
    if (j == 0) return false;
    if (j % 2 == 0 && at(x, j - 1) != at(y, j - 1)) return false;
    int blocks = (j + 1) / 2 - 1;  // 2-bit pairs fully below position j
    for (int i = 1; i <= blocks; ++i) {
        std::string bx{at(x, 2 * i), at(x, 2 * i - 1)};
        std::string by{at(y, 2 * i), at(y, 2 * i - 1)};
        if (!pair_related(bx, by)) return false;
    }
    return true;
}

inline Graph gen_q(int n) {
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (int v = 0; v < (1 << n); ++v) {
        labels.push_back(bits_of(v, n));
        for (int i = 0; i < n; ++i)
            if ((v ^ (1 << i)) > v) edges.push_back({v, v ^ (1 << i)});
    }
    return Graph::make(1 << n, std::move(edges), std::move(labels));
}

inline Graph gen_cq(int n) {
    std::vector<std::string> labels;
    for (int v = 0; v < (1 << n); ++v) labels.push_back(bits_of(v, n));
    std::vector<Edge> edges;
    for (int a = 0; a < (1 << n); ++a)
        for (int b = a + 1; b < (1 << n); ++b)
            if (cq_adjacent(labels[a], labels[b], n)) edges.push_back({a, b});
    return Graph::make(1 << n, std::move(edges), std::move(labels));
}

inline Graph gen_ltq(int n) {
    // recursive construction on labels x_1..x_n; LTQ_2 = Q_2
    std::vector<Edge> edges;
    if (n == 2) {
        edges = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    } else {
        Graph h = gen_ltq(n - 1);
        int half = 1 << (n - 1);
        for (auto [a, b] : h.edges()) {
            edges.push_back({a, b});                // 0-prefixed copy
            edges.push_back({half + a, half + b});  // 1-prefixed copy
        }
        for (int a = 0; a < half; ++a) {
            int x2 = a >> (n - 2) & 1;  // x_2 of the prefixed label
            int xn = a & 1;             // x_n
            int partner = half | ((x2 ^ xn) << (n - 2)) | (a & ((1 << (n - 2)) - 1));
            edges.push_back({a, partner});
        }
    }
    std::vector<std::string> labels;
    for (int v = 0; v < (1 << n); ++v) labels.push_back(bits_of(v, n));
    return Graph::make(1 << n, std::move(edges), std::move(labels));
}

inline Graph gen_mq(int n, int variant) {
    // labels x_1..x_n; neighbor i complements bit i if x_{i-1} = 0, or
    // bits i..n if x_{i-1} = 1; x_0 is not stored, the variant stands in
    // for it when i = 1
    std::vector<std::string> labels;
    for (int v = 0; v < (1 << n); ++v) labels.push_back(bits_of(v, n));
    std::set<Edge> edges;
    auto bit = [&](int v, int i) { return v >> (n - i) & 1; };  // x_i
    for (int v = 0; v < (1 << n); ++v) {
        for (int i = 1; i <= n; ++i) {
            int xim1 = (i == 1) ? variant : bit(v, i - 1);
            int w;
            if (xim1 == 0) {
                w = v ^ (1 << (n - i));
            } else {
                int mask = (1 << (n - i + 1)) - 1;  // bits i..n
                w = v ^ mask;
            }
            edges.insert({std::min(v, w), std::max(v, w)});
        }
    }
    return Graph::make(1 << n, {edges.begin(), edges.end()}, std::move(labels));
}

}  // namespace detail

inline Graph generate(const CubeSpec& spec) {
    spec.validate();
    switch (spec.family) {
        case CubeFamily::Q: return detail::gen_q(spec.order);
        case CubeFamily::CQ: return detail::gen_cq(spec.order);
        case CubeFamily::LTQ: return detail::gen_ltq(spec.order);
        case CubeFamily::MQ: return detail::gen_mq(spec.order, spec.variant);
    }
    throw std::invalid_argument("unknown family");
}

/// Split along the leading label bit: left = labels starting with 0.
struct SplitView {
    VertexSubset left, right;
    InducedSubgraph left_graph, right_graph;
    std::vector<Edge> cross_edges;  // E[left, right], host indices
};

inline SplitView split(const Graph& g) {
    if (!g.has_labels()) throw std::invalid_argument("split requires labels");
    std::vector<int> l, r;
    for (int v = 0; v < g.n(); ++v)
        (g.label(v)[0] == '0' ? l : r).push_back(v);
    SplitView sv;
    sv.left = VertexSubset(std::move(l));
    sv.right = VertexSubset(std::move(r));
    sv.left_graph = induced_subgraph(g, sv.left);
    sv.right_graph = induced_subgraph(g, sv.right);
    sv.cross_edges = boundary_and_counts(g, sv.left, sv.right).edges;
    return sv;
}

/// The matching bijection between halves: pi[u] = the unique cross
/// neighbor of u, for every left vertex u (host indices; -1 elsewhere).
inline std::vector<int> pi_map(const SplitView& sv, const Graph& g) {
    std::vector<int> pi(g.n(), -1);
    std::vector<int> cnt(g.n(), 0);
    for (auto [u, v] : sv.cross_edges) {
        int lu = sv.left.contains(u) ? u : v;
        int rv = sv.left.contains(u) ? v : u;
        pi[lu] = rv;
        ++cnt[lu];
        ++cnt[rv];
    }
    for (int u : sv.left.verts)
        if (cnt[u] != 1) throw std::invalid_argument("cross edges are not a perfect matching");
    for (int v : sv.right.verts)
        if (cnt[v] != 1) throw std::invalid_argument("cross edges are not a perfect matching");
    return pi;
}

}  // namespace cubecross
