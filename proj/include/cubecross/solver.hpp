// Crossing number machinery: a certified lower bound from the Euler
// formula with girth, an exact branch-and-bound decision procedure over
// crossing certificates, and a randomized edge-insertion heuristic for
// upper bounds.
#pragma once

#include <chrono>
#include <climits>
#include <random>
#include <unordered_set>

#include "cubecross/iso.hpp"
#include "cubecross/planarization.hpp"

namespace cubecross {

struct Budget {
    long max_nodes = 2'000'000;   // branch-and-bound nodes
    double max_seconds = 0;       // 0 = no wall-clock limit
    int threads = 1;              // accepted for interface stability
};

enum class Tri { Yes, No, Unknown };

struct DecideResult {
    Tri status = Tri::Unknown;
    std::optional<Planarization> certificate;  // present when status == Yes
    long nodes_explored = 0;
};

/// cr(G) >= m - g/(g-2) * (n-2) per component, from Euler's formula for
/// planar graphs of girth g. Acyclic components contribute nothing.
inline int euler_girth_bound(const Graph& g) {
    std::vector<int> comp(g.n(), -1);
    int comps = 0;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = comps;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (comp[w] < 0) { comp[w] = comps; stack.push_back(w); }
        }
        ++comps;
    }
    long total = 0;
    for (int c = 0; c < comps; ++c) {
        std::vector<int> verts;
        for (int v = 0; v < g.n(); ++v)
            if (comp[v] == c) verts.push_back(v);
        auto [sub, to_host] = induced_subgraph(g, VertexSubset{verts});
        auto gr = girth(sub);
        if (!gr) continue;
        long gg = *gr, nn = sub.n(), mm = sub.m();
        // ceil(m - g*(n-2)/(g-2)), and g*(n-2)/(g-2) floored favors us
        long cap = gg * (nn - 2) / (gg - 2);
        if (mm > cap) total += mm - cap;
    }
    return static_cast<int>(std::min<long>(total, INT_MAX));
}

namespace detail {

struct SolverCtx {
    const Graph& g;
    int k;
    const Budget& budget;
    std::chrono::steady_clock::time_point deadline;
    bool use_deadline = false;
    long nodes = 0;
    bool exhausted = false;
    std::unordered_set<std::string> visited;
    // root symmetry reduction: representative per edge-pair orbit
    std::map<std::pair<int, int>, std::pair<int, int>> pair_rep;
};

inline bool over_budget(SolverCtx& ctx) {
    if (ctx.budget.max_nodes > 0 && ctx.nodes >= ctx.budget.max_nodes) return true;
    if (ctx.use_deadline && (ctx.nodes & 63) == 0 &&
        std::chrono::steady_clock::now() > ctx.deadline)
        return true;
    return false;
}

// host edges used by a Kuratowski witness, as (base edge, gap) slots
inline std::vector<std::pair<int, int>> witness_slots(const HostGraph& host,
                                                      const KuratowskiWitness& w) {
    std::set<int> host_edges;
    for (const auto& path : w.paths)
        for (size_t i = 0; i + 1 < path.size(); ++i)
            host_edges.insert(host.graph.edge_index(path[i], path[i + 1]));
    std::vector<std::pair<int, int>> slots;
    for (int he : host_edges) slots.push_back({host.origin[he], host.gap[he]});
    return slots;
}

inline Tri decide_rec(SolverCtx& ctx, Planarization& p,
                      std::optional<Planarization>& cert) {
    if (over_budget(ctx)) { ctx.exhausted = true; return Tri::Unknown; }
    ++ctx.nodes;
    if (!ctx.visited.insert(canonical_key(ctx.g, p)).second) return Tri::No;

    auto host = build_host(ctx.g, p);
    auto pr = is_planar(host.graph);
    if (pr.planar) { cert = p; return Tri::Yes; }
    int used = static_cast<int>(p.crossings.size());
    if (used == ctx.k) return Tri::No;

    // crossings inside the still-uncrossed part are all extra
    {
        std::vector<std::pair<int, int>> free_edges;
        for (int e = 0; e < ctx.g.m(); ++e)
            if (p.order[e].empty()) free_edges.push_back(ctx.g.edges()[e]);
        Graph rest = Graph::make(ctx.g.n(), free_edges);
        if (used + euler_girth_bound(rest) > ctx.k) return Tri::No;
    }

    // any completion to a planar host must identify two witness slots
    auto slots = witness_slots(host, *pr.witness);
    std::set<std::pair<int, int>> crossing_pairs;
    for (const auto& c : p.crossings) crossing_pairs.insert({c.e1, c.e2});
    struct Branch { int e1, g1, e2, g2; };
    std::vector<Branch> branches;
    std::set<std::pair<int, int>> seen_pairs;
    for (size_t i = 0; i < slots.size(); ++i)
        for (size_t j = i + 1; j < slots.size(); ++j) {
            auto [ea, ga] = slots[i];
            auto [eb, gb] = slots[j];
            if (ea == eb) continue;
            if (ea > eb) { std::swap(ea, eb); std::swap(ga, gb); }
            auto [u1, v1] = ctx.g.edges()[ea];
            auto [u2, v2] = ctx.g.edges()[eb];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) continue;
            if (crossing_pairs.count({ea, eb})) continue;
            if (used == 0) {
                // at the root all gaps are 0: dedupe by automorphism orbit
                auto rep = ctx.pair_rep.at({ea, eb});
                if (!seen_pairs.insert(rep).second) continue;
                branches.push_back({rep.first, 0, rep.second, 0});
            } else {
                branches.push_back({ea, ga, eb, gb});
            }
        }

    bool unknown = false;
    for (const auto& br : branches) {
        Planarization q = p;
        int ci = static_cast<int>(q.crossings.size());
        q.crossings.push_back({br.e1, br.e2});
        q.order[br.e1].insert(q.order[br.e1].begin() + br.g1, ci);
        q.order[br.e2].insert(q.order[br.e2].begin() + br.g2, ci);
        Tri t = decide_rec(ctx, q, cert);
        if (t == Tri::Yes) return Tri::Yes;
        if (t == Tri::Unknown) unknown = true;
    }
    return unknown ? Tri::Unknown : Tri::No;
}

}  // namespace detail

/// Decides whether G admits a drawing with at most k crossings. Yes comes
/// with a verified certificate; Unknown only when the budget ran out.
inline DecideResult cr_decide(const Graph& g, int k, const Budget& budget = {}) {
    detail::SolverCtx ctx{g, k, budget};
    if (budget.max_seconds > 0) {
        ctx.use_deadline = true;
        ctx.deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(budget.max_seconds));
    }

    // orbit representatives of non-adjacent edge pairs under Aut(G)
    {
        auto aut = automorphisms(g);
        auto edge_image = [&](const IsoMapping& f, int e) {
            auto [u, v] = g.edges()[e];
            return g.edge_index(f[u], f[v]);
        };
        for (int e1 = 0; e1 < g.m(); ++e1)
            for (int e2 = e1 + 1; e2 < g.m(); ++e2) {
                std::pair<int, int> rep{e1, e2};
                for (const auto& f : aut.elements) {
                    int a = edge_image(f, e1), b = edge_image(f, e2);
                    if (a > b) std::swap(a, b);
                    rep = std::min(rep, {a, b});
                }
                ctx.pair_rep[{e1, e2}] = rep;
            }
    }

    Planarization root;
    root.order.assign(g.m(), {});
    std::optional<Planarization> cert;
    Tri t = detail::decide_rec(ctx, root, cert);
    if (t == Tri::Yes && !verify_certificate(g, *cert))
        throw std::logic_error("solver produced an invalid certificate");
    return {ctx.exhausted && t != Tri::Yes ? Tri::Unknown : t, cert, ctx.nodes};
}

namespace detail {

// planar faces of an embedding given as a rotation system
struct EmbeddedFaces {
    // face -> directed host edges (u, v); dual moves cross host edges
    std::vector<std::vector<std::pair<int, int>>> faces;
    std::map<std::pair<int, int>, int> face_of;  // directed edge -> face
};

inline EmbeddedFaces trace_faces(const Graph& g,
                                 const std::vector<std::vector<int>>& rot) {
    EmbeddedFaces ef;
    std::map<std::pair<int, int>, int> pos;
    for (int v = 0; v < g.n(); ++v)
        for (size_t i = 0; i < rot[v].size(); ++i)
            pos[{v, rot[v][i]}] = static_cast<int>(i);
    for (int v = 0; v < g.n(); ++v)
        for (int w : rot[v]) {
            if (ef.face_of.count({v, w})) continue;
            int f = static_cast<int>(ef.faces.size());
            ef.faces.push_back({});
            int a = v, b = w;
            do {
                ef.face_of[{a, b}] = f;
                ef.faces[f].push_back({a, b});
                int i = pos.at({b, a});
                int deg = static_cast<int>(rot[b].size());
                int c = rot[b][(i + 1) % deg];
                a = b;
                b = c;
            } while (!(a == v && b == w));
        }
    return ef;
}

}  // namespace detail

struct UpperBoundResult {
    int crossings = -1;
    Planarization certificate;
    unsigned seed_used = 0;
    int restarts_used = 0;
};

/// Randomized upper bound: grow a maximal planar subgraph in a shuffled
/// edge order, then insert each remaining edge along a shortest path in
/// the dual of the current planarization. Keeps the best certificate over
/// the given number of restarts.
inline UpperBoundResult cr_upper_bound(const Graph& g, unsigned seed = 1,
                                       int restarts = 64, int target = -1) {
    UpperBoundResult best;
    std::mt19937 rng(seed);
    for (int attempt = 0; attempt < restarts; ++attempt) {
        std::vector<int> edge_order(g.m());
        std::iota(edge_order.begin(), edge_order.end(), 0);
        std::shuffle(edge_order.begin(), edge_order.end(), rng);

        Planarization p;
        p.order.assign(g.m(), {});
        std::vector<char> inserted(g.m(), 0);
        std::vector<int> pending;

        // greedy maximal planar subgraph
        std::vector<std::pair<int, int>> acc;
        for (int e : edge_order) {
            acc.push_back(g.edges()[e]);
            if (is_planar_quick(Graph::make(g.n(), acc))) {
                inserted[e] = 1;
            } else {
                acc.pop_back();
                pending.push_back(e);
            }
        }

        bool failed = false;
        for (int e : pending) {
            // host restricted to the edges inserted so far
            std::vector<std::pair<int, int>> hedges;
            std::vector<int> horigin, hgap;
            int n = g.n();
            for (int be = 0; be < g.m(); ++be) {
                if (!inserted[be]) continue;
                int prev = g.edges()[be].first, gp = 0;
                for (int ci : p.order[be]) {
                    hedges.push_back({prev, n + ci});
                    horigin.push_back(be);
                    hgap.push_back(gp++);
                    prev = n + ci;
                }
                hedges.push_back({prev, g.edges()[be].second});
                horigin.push_back(be);
                hgap.push_back(gp);
            }
            Graph host = Graph::make(n + static_cast<int>(p.crossings.size()),
                                     hedges);
            {
                // realign slot annotations with the graph's edge order
                std::vector<int> o2(hedges.size()), g2(hedges.size());
                for (size_t i = 0; i < hedges.size(); ++i) {
                    int he = host.edge_index(hedges[i].first, hedges[i].second);
                    o2[he] = horigin[i];
                    g2[he] = hgap[i];
                }
                horigin = std::move(o2);
                hgap = std::move(g2);
            }
            auto pr = is_planar(host);
            if (!pr.planar)
                throw std::logic_error("edge insertion broke host planarity");
            auto ef = detail::trace_faces(host, pr.embedding);
            int F = static_cast<int>(ef.faces.size());
            auto [u, v] = g.edges()[e];

            std::set<int> banned;  // base edges the path may not cross
            for (int be = 0; be < g.m(); ++be) {
                auto [a, b] = g.edges()[be];
                if (a == u || a == v || b == u || b == v) banned.insert(be);
            }

            std::vector<int> crossed_hosts;
            bool routed = false;
            for (int retry = 0; retry < 8 && !routed; ++retry) {
                // BFS over faces; crossing host edge h costs one
                std::vector<int> dist(F, -1), from_face(F, -1), via(F, -1);
                std::vector<int> queue;
                auto seed_faces = [&](int vert, std::vector<char>& mark) {
                    bool any = false;
                    for (const auto& kv : ef.face_of)
                        if (kv.first.first == vert) { mark[kv.second] = 1; any = true; }
                    if (!any) std::fill(mark.begin(), mark.end(), 1);  // isolated
                };
                std::vector<char> src(F, 0), dst(F, 0);
                seed_faces(u, src);
                seed_faces(v, dst);
                for (int f = 0; f < F; ++f)
                    if (src[f]) { dist[f] = 0; queue.push_back(f); }
                int goal = -1;
                for (size_t qi = 0; qi < queue.size() && goal < 0; ++qi) {
                    int f = queue[qi];
                    if (dst[f]) { goal = f; break; }
                    for (auto [a, b] : ef.faces[f]) {
                        int he = host.edge_index(a, b);
                        if (banned.count(horigin[he])) continue;
                        int f2 = ef.face_of.at({b, a});
                        if (dist[f2] < 0) {
                            dist[f2] = dist[f] + 1;
                            from_face[f2] = f;
                            via[f2] = he;
                            queue.push_back(f2);
                            if (dst[f2]) { goal = f2; qi = queue.size(); break; }
                        }
                    }
                }
                if (goal < 0) { failed = true; break; }
                crossed_hosts.clear();
                for (int f = goal; via[f] >= 0; f = from_face[f])
                    crossed_hosts.push_back(via[f]);
                std::reverse(crossed_hosts.begin(), crossed_hosts.end());
                // a good drawing crosses each partner edge at most once
                std::set<int> dup;
                bool ok = true;
                for (int he : crossed_hosts)
                    if (!dup.insert(horigin[he]).second) {
                        banned.insert(horigin[he]);
                        ok = false;
                    }
                if (ok) routed = true;
                else crossed_hosts.clear();
            }
            if (failed || !routed) { failed = true; break; }

            // record the crossings; later slots on the same edge shift
            std::map<int, int> shift;  // base edge -> inserts already done
            for (int he : crossed_hosts) {
                int be = horigin[he];
                int ci = static_cast<int>(p.crossings.size());
                Crossing c{std::min(e, be), std::max(e, be)};
                p.crossings.push_back(c);
                p.order[e].push_back(ci);
                int gp = hgap[he] + shift[be];
                p.order[be].insert(p.order[be].begin() + gp, ci);
                ++shift[be];
            }
            inserted[e] = 1;
        }
        if (failed) continue;
        int total = static_cast<int>(p.crossings.size());
        if (!verify_certificate(g, p)) continue;
        if (best.crossings < 0 || total < best.crossings) {
            best.crossings = total;
            best.certificate = p;
            best.seed_used = seed;
            best.restarts_used = attempt + 1;
        }
        if (target >= 0 && best.crossings <= target) break;
    }
    if (best.crossings < 0)
        throw std::runtime_error("upper bound heuristic failed on every restart");
    return best;
}

struct CrResult {
    int lower = 0;
    int upper = -1;
    std::optional<Planarization> certificate;  // realizes the upper bound
    long nodes_explored = 0;
    bool exact = false;
    bool budget_exhausted = false;
};

/// Certified bracket for cr(G): heuristic upper bound, then exact decision
/// for each k from the Euler bound upwards until the bracket closes or the
/// budget runs out.
inline CrResult crossing_number(const Graph& g, const Budget& budget = {},
                                unsigned seed = 1, int restarts = 64) {
    CrResult res;
    res.lower = euler_girth_bound(g);
    if (is_planar_quick(g)) {
        res.upper = 0;
        res.lower = 0;
        res.exact = true;
        Planarization p;
        p.order.assign(g.m(), {});
        res.certificate = p;
        return res;
    }
    if (res.lower == 0) res.lower = 1;
    auto ub = cr_upper_bound(g, seed, restarts);
    res.upper = ub.crossings;
    res.certificate = ub.certificate;

    for (int k = res.lower; k < res.upper; ++k) {
        auto dec = cr_decide(g, k, budget);
        res.nodes_explored += dec.nodes_explored;
        if (dec.status == Tri::Yes) {
            res.upper = k;
            res.certificate = dec.certificate;
            break;
        }
        if (dec.status == Tri::No) {
            res.lower = k + 1;
            continue;
        }
        res.budget_exhausted = true;
        break;
    }
    res.exact = res.lower == res.upper;
    return res;
}

}  // namespace cubecross
