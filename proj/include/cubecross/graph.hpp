// Core graph representation: labeled undirected simple graphs with the
// structural queries the rest of the workbench is built on.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cubecross {

using Edge = std::pair<int, int>;  // stored with first < second

/// Simple undirected graph on vertices 0..n-1. Optional bit-string labels
/// are metadata only; vertex identity is the index. Instances are treated
/// as immutable values once built.
class Graph {
public:
    Graph() = default;

    static Graph make(int n, std::vector<Edge> edges,
                      std::vector<std::string> labels = {}) {
        Graph g;
        g.n_ = n;
        for (auto& [u, v] : edges) {
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
            if (u == v) throw std::invalid_argument("loop edge");
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw std::invalid_argument("parallel edge");
        g.edges_ = std::move(edges);
        if (!labels.empty()) {
            if (static_cast<int>(labels.size()) != n)
                throw std::invalid_argument("label count != n");
            for (const auto& l : labels)
                if (l.size() != labels[0].size())
                    throw std::invalid_argument("labels of unequal length");
            auto sorted = labels;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw std::invalid_argument("duplicate label");
            g.labels_ = std::move(labels);
        }
        g.adj_.assign(n, {});
        for (auto [u, v] : g.edges_) {
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
        for (auto& a : g.adj_) std::sort(a.begin(), a.end());
        return g;
    }

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
        const auto& a = adj_[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    /// Index of edge {u,v} in edges(), or -1.
    int edge_index(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
        if (it == edges_.end() || *it != Edge{u, v}) return -1;
        return static_cast<int>(it - edges_.begin());
    }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(v); }

    bool is_regular(int d) const {
        for (int v = 0; v < n_; ++v)
            if (degree(v) != d) return false;
        return true;
    }

    bool is_connected() const {
        if (n_ == 0) return true;
        std::vector<char> seen(n_, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj_[v])
                if (!seen[w]) { seen[w] = 1; ++cnt; stack.push_back(w); }
        }
        return cnt == n_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
};

/// Subset of a host graph's vertices, kept as a sorted index list.
struct VertexSubset {
    std::vector<int> verts;  // sorted, unique

    VertexSubset() = default;
    explicit VertexSubset(std::vector<int> v) : verts(std::move(v)) {
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    }

    static VertexSubset from_mask(std::uint64_t mask, int n) {
        std::vector<int> v;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) v.push_back(i);
        return VertexSubset(std::move(v));
    }

    static VertexSubset full(int n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = i;
        return VertexSubset(std::move(v));
    }

    int size() const { return static_cast<int>(verts.size()); }
    bool contains(int v) const {
        return std::binary_search(verts.begin(), verts.end(), v);
    }
    bool valid_for(const Graph& g) const {
        return verts.empty() || (verts.front() >= 0 && verts.back() < g.n());
    }
    VertexSubset complement(const Graph& g) const {
        std::vector<int> out;
        for (int v = 0; v < g.n(); ++v)
            if (!contains(v)) out.push_back(v);
        return VertexSubset(std::move(out));
    }
    bool operator==(const VertexSubset& o) const { return verts == o.verts; }
    bool operator<(const VertexSubset& o) const { return verts < o.verts; }
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_host;  // new index -> host index
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSubset& s) {
    if (!s.valid_for(g)) throw std::invalid_argument("subset index out of range");
    std::vector<int> back(g.n(), -1);
    for (int i = 0; i < s.size(); ++i) back[s.verts[i]] = i;
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (back[u] >= 0 && back[v] >= 0)
            edges.push_back({back[u], back[v]});
    return {Graph::make(s.size(), std::move(edges)), s.verts};
}

struct BoundaryCount {
    std::vector<Edge> edges;  // E[X, Y]
    int count = 0;            // e(X, Y)
};

/// E[X,Y] and e(X,Y): edges with one end in X, the other in Y. X and Y may
/// overlap; with Y the complement of X this is the edge boundary of X.
inline BoundaryCount boundary_and_counts(const Graph& g, const VertexSubset& x,
                                         const VertexSubset& y) {
    if (!x.valid_for(g) || !y.valid_for(g))
        throw std::invalid_argument("subset index out of range");
    BoundaryCount out;
    for (auto [u, v] : g.edges()) {
        if ((x.contains(u) && y.contains(v)) || (x.contains(v) && y.contains(u)))
            out.edges.push_back({u, v});
    }
    out.count = static_cast<int>(out.edges.size());
    return out;
}

/// e(X) = number of edges with both ends in X.
inline int internal_edge_count(const Graph& g, const VertexSubset& x) {
    int c = 0;
    for (auto [u, v] : g.edges())
        if (x.contains(u) && x.contains(v)) ++c;
    return c;
}

struct InducedClass {
    enum Kind { Path, Cycle, Other } kind = Other;
    int k = 0;  // vertex count of the path/cycle

    bool is_path(int len) const { return kind == Path && k == len; }
    bool is_cycle(int len) const { return kind == Cycle && k == len; }
};

/// Classifies the subgraph induced by s as a path P_k, a cycle C_k, or other.
/// A triangle is reported as C_3.
inline InducedClass classify_induced(const Graph& g, const VertexSubset& s) {
    if (s.size() == 0) throw std::invalid_argument("empty subset");
    auto [h, _] = induced_subgraph(g, s);
    int k = h.n();
    if (!h.is_connected()) return {InducedClass::Other, 0};
    std::vector<int> degs;
    for (int v = 0; v < k; ++v) degs.push_back(h.degree(v));
    std::sort(degs.begin(), degs.end());
    if (k == 1 && h.m() == 0) return {InducedClass::Path, 1};
    if (h.m() == k - 1 && degs.front() == 1 && degs.back() <= 2)
        return {InducedClass::Path, k};
    if (k >= 3 && h.m() == k && degs.front() == 2 && degs.back() == 2)
        return {InducedClass::Cycle, k};
    return {InducedClass::Other, 0};
}

/// Girth via BFS from every vertex; nullopt for forests.
inline std::optional<int> girth(const Graph& g) {
    int best = -1;
    for (int s = 0; s < g.n(); ++s) {
        std::vector<int> dist(g.n(), -1), parent(g.n(), -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else if (w != parent[v]) {
                    int len = dist[v] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

/// All unordered partitions {V1, V2} of an 8-vertex graph with both sides
/// inducing C4.
inline std::vector<std::pair<VertexSubset, VertexSubset>>
find_c4_partitions(const Graph& g) {
    if (g.n() != 8) throw std::invalid_argument("find_c4_partitions needs n = 8");
    std::vector<std::pair<VertexSubset, VertexSubset>> out;
    // fix vertex 0 on the first side to dedup unordered pairs
    for (std::uint64_t mask = 1; mask < 256; mask += 2) {
        if (__builtin_popcountll(mask) != 4) continue;
        auto a = VertexSubset::from_mask(mask, 8);
        auto b = a.complement(g);
        if (classify_induced(g, a).is_cycle(4) && classify_induced(g, b).is_cycle(4))
            out.push_back({a, b});
    }
    return out;
}

/// All simple cycles, each as a vertex sequence (first vertex minimal,
/// orientation canonical). Intended for small graphs only.
inline std::vector<std::vector<int>> all_cycles(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    std::vector<char> used(g.n(), 0);
    // anchored DFS: cycles are generated from their minimal vertex
    auto dfs = [&](auto&& self, int anchor, int v) -> void {
        for (int w : g.neighbors(v)) {
            if (w == anchor && path.size() >= 3) {
                // canonical orientation: second vertex < last vertex
                if (path[1] < path.back()) out.push_back(path);
            } else if (w > anchor && !used[w]) {
                used[w] = 1;
                path.push_back(w);
                self(self, anchor, w);
                path.pop_back();
                used[w] = 0;
            }
        }
    };
    for (int a = 0; a < g.n(); ++a) {
        path = {a};
        used[a] = 1;
        dfs(dfs, a, a);
        used[a] = 0;
    }
    return out;
}

}  // namespace cubecross
