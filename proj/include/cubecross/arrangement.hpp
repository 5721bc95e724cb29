// Planar subdivision induced by a good drawing: crossings become map
// vertices, faces are traversed from the exact rotation system. Supports
// the region machinery (V_on, B(f,h), point-in-face queries) and the
// vertex-disjoint cycle parity check.
#pragma once

#include <numeric>

#include "cubecross/drawing.hpp"

namespace cubecross {

namespace detail {

// counterclockwise comparator on direction vectors, starting at +x
inline bool angle_less(const Pt& a, const Pt& b) {
    auto half = [](const Pt& d) {
        return (d.y < 0 || (d.y == 0 && d.x < 0)) ? 1 : 0;
    };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

}  // namespace detail

struct Arrangement {
    struct Arc {
        int a = 0, b = 0;          // node ids
        std::vector<Pt> pts;       // chain from a to b, endpoints included
        int edge = 0;              // original edge index
    };
    struct Face {
        std::vector<int> halfedges;   // boundary walk, face on the left
        std::vector<int> von;         // incident graph vertices (sorted)
        std::vector<int> arcs;        // arcs on the boundary (sorted, unique)
        bool unbounded = false;
    };

    int num_nodes = 0;  // graph vertices then crossings
    int graph_vertices = 0;
    std::vector<Pt> node_pos;
    std::vector<Arc> arcs;
    std::vector<Face> faces;

    // halfedge h: arc h/2, direction h%2 (0 = a->b)
    int halfedge_from(int h) const { return h % 2 == 0 ? arcs[h / 2].a : arcs[h / 2].b; }
    int halfedge_to(int h) const { return h % 2 == 0 ? arcs[h / 2].b : arcs[h / 2].a; }

    int unbounded_face() const {
        for (size_t f = 0; f < faces.size(); ++f)
            if (faces[f].unbounded) return static_cast<int>(f);
        return -1;
    }

    bool adjacent(int f, int h) const {
        if (f == h) return false;
        const auto& fa = faces[f].arcs;
        const auto& ha = faces[h].arcs;
        std::vector<int> common;
        std::set_intersection(fa.begin(), fa.end(), ha.begin(), ha.end(),
                              std::back_inserter(common));
        return !common.empty();
    }
};

/// Builds the arrangement of a good drawing. The induced subdivision must
/// be connected (a single drawing component); edgeless graphs get the
/// one-face plane.
inline Arrangement arrangement(const PolylineDrawing& d) {
    if (!validate_good(d).good())
        throw GeometryError("arrangement requires a good drawing");
    const auto& g = d.graph;
    Arrangement arr;
    arr.graph_vertices = g.n();
    arr.node_pos = d.pos;

    auto cross_recs = crossings(d);
    arr.num_nodes = g.n() + static_cast<int>(cross_recs.size());
    for (const auto& c : cross_recs) arr.node_pos.push_back(c.point);

    if (g.m() == 0) {
        Arrangement::Face plane;
        plane.unbounded = true;
        arr.faces.push_back(plane);
        return arr;
    }

    // split every edge at its crossings, in order along the polyline
    for (int e = 0; e < g.m(); ++e) {
        struct Split { int seg; Rat t; int node; };
        std::vector<Split> splits;
        for (size_t ci = 0; ci < cross_recs.size(); ++ci) {
            const auto& c = cross_recs[ci];
            if (c.e1 == e) splits.push_back({c.seg1, c.t1, g.n() + (int)ci});
            if (c.e2 == e) splits.push_back({c.seg2, c.t2, g.n() + (int)ci});
        }
        std::sort(splits.begin(), splits.end(), [](const Split& a, const Split& b) {
            return a.seg < b.seg || (a.seg == b.seg && a.t < b.t);
        });
        auto chain = d.polyline(e);
        Arrangement::Arc arc;
        arc.a = g.edges()[e].first;
        arc.edge = e;
        arc.pts = {d.pos[arc.a]};
        size_t next_split = 0;
        for (size_t s = 0; s + 1 < chain.size(); ++s) {
            while (next_split < splits.size() &&
                   splits[next_split].seg == static_cast<int>(s)) {
                const auto& sp = splits[next_split];
                Pt cp = arr.node_pos[sp.node];
                arc.pts.push_back(cp);
                arc.b = sp.node;
                arr.arcs.push_back(arc);
                arc = Arrangement::Arc{};
                arc.a = sp.node;
                arc.edge = e;
                arc.pts = {cp};
                ++next_split;
            }
            arc.pts.push_back(chain[s + 1]);
        }
        arc.b = g.edges()[e].second;
        arr.arcs.push_back(arc);
    }

    int A = static_cast<int>(arr.arcs.size());
    // rotation system: outgoing halfedges per node, counterclockwise
    std::vector<std::vector<int>> rot(arr.num_nodes);
    auto out_dir = [&](int h) {
        const auto& arc = arr.arcs[h / 2];
        return h % 2 == 0 ? arc.pts[1] - arc.pts[0]
                          : arc.pts[arc.pts.size() - 2] - arc.pts.back();
    };
    for (int h = 0; h < 2 * A; ++h) rot[arr.halfedge_from(h)].push_back(h);
    for (auto& r : rot)
        std::sort(r.begin(), r.end(), [&](int h1, int h2) {
            return detail::angle_less(out_dir(h1), out_dir(h2));
        });

    // connectivity of the subdivision (isolated graph vertices also count)
    {
        std::vector<int> comp(arr.num_nodes, -1);
        std::vector<int> stack;
        int comps = 0;
        for (int v = 0; v < arr.num_nodes; ++v) {
            if (comp[v] >= 0) continue;
            if (v < g.n() && rot[v].empty() && g.degree(v) == 0) {
                comp[v] = comps++;  // isolated vertex
                continue;
            }
            comp[v] = comps;
            stack.push_back(v);
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int h : rot[x]) {
                    int y = arr.halfedge_to(h);
                    if (comp[y] < 0) { comp[y] = comps; stack.push_back(y); }
                }
            }
            ++comps;
        }
        if (comps > 1)
            throw GeometryError("arrangement supports connected drawings only");
    }

    // face traversal with faces on the left: the successor of h is the
    // clockwise neighbor of its twin at the head node
    std::vector<int> pos_in_rot(2 * A);
    for (int v = 0; v < arr.num_nodes; ++v)
        for (size_t i = 0; i < rot[v].size(); ++i) pos_in_rot[rot[v][i]] = (int)i;
    auto next_he = [&](int h) {
        int twin = h ^ 1;
        int v = arr.halfedge_from(twin);
        const auto& r = rot[v];
        int i = pos_in_rot[twin];
        return r[(i + r.size() - 1) % r.size()];
    };
    std::vector<int> face_of(2 * A, -1);
    for (int h0 = 0; h0 < 2 * A; ++h0) {
        if (face_of[h0] >= 0) continue;
        Arrangement::Face face;
        Rat area2 = 0;
        int h = h0;
        do {
            face_of[h] = static_cast<int>(arr.faces.size());
            face.halfedges.push_back(h);
            const auto& arc = arr.arcs[h / 2];
            auto pts = arc.pts;
            if (h % 2) std::reverse(pts.begin(), pts.end());
            for (size_t i = 0; i + 1 < pts.size(); ++i)
                area2 += cross(pts[i], pts[i + 1]);
            int from = arr.halfedge_from(h);
            if (from < g.n()) face.von.push_back(from);
            face.arcs.push_back(h / 2);
            h = next_he(h);
        } while (h != h0);
        std::sort(face.von.begin(), face.von.end());
        face.von.erase(std::unique(face.von.begin(), face.von.end()), face.von.end());
        std::sort(face.arcs.begin(), face.arcs.end());
        face.arcs.erase(std::unique(face.arcs.begin(), face.arcs.end()),
                        face.arcs.end());
        face.unbounded = area2 < 0;
        arr.faces.push_back(std::move(face));
    }

    // deterministic face order: leftmost-lowest boundary node first
    std::vector<int> order(arr.faces.size());
    std::iota(order.begin(), order.end(), 0);
    auto face_key = [&](int f) {
        Pt best = arr.node_pos[arr.halfedge_from(arr.faces[f].halfedges[0])];
        for (int h : arr.faces[f].halfedges) {
            Pt p = arr.node_pos[arr.halfedge_from(h)];
            if (p < best) best = p;
        }
        return std::tuple(arr.faces[f].unbounded, best, arr.faces[f].arcs);
    };
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return face_key(a) < face_key(b); });
    std::vector<Arrangement::Face> sorted;
    for (int f : order) sorted.push_back(std::move(arr.faces[f]));
    arr.faces = std::move(sorted);
    return arr;
}

/// Exact point location: face id per query point. Points on the drawing
/// are rejected.
inline std::vector<int> locate(const Arrangement& arr, const std::vector<Pt>& pts) {
    // halfedge -> face map
    std::map<std::pair<int, int>, int> he_face;  // (arc, dir) -> face
    for (size_t f = 0; f < arr.faces.size(); ++f)
        for (int h : arr.faces[f].halfedges)
            he_face[{h / 2, h % 2}] = static_cast<int>(f);

    std::vector<int> out;
    for (const auto& p : pts) {
        bool found = false;
        Pt best_hit;
        Rat best_slope;
        int best_face = -1;
        for (size_t ai = 0; ai < arr.arcs.size(); ++ai) {
            const auto& arc = arr.arcs[ai];
            for (size_t s = 0; s + 1 < arc.pts.size(); ++s) {
                Pt q1 = arc.pts[s], q2 = arc.pts[s + 1];
                if (on_segment(p, q1, q2))
                    throw GeometryError("query point lies on the drawing");
                if (q1.x == q2.x) continue;  // vertical: half-open rule skips it
                Pt lo = q1.x < q2.x ? q1 : q2, hi = q1.x < q2.x ? q2 : q1;
                if (!(lo.x <= p.x && p.x < hi.x)) continue;
                Rat y = lo.y + (p.x - lo.x) * (hi.y - lo.y) / (hi.x - lo.x);
                if (y <= p.y) continue;
                Rat slope = (hi.y - lo.y) / (hi.x - lo.x);
                Pt hitp{p.x, y};
                bool better = !found || hitp.y < best_hit.y ||
                              (hitp.y == best_hit.y && slope < best_slope);
                if (better) {
                    found = true;
                    best_hit = hitp;
                    best_slope = slope;
                    // the face below the segment: left of the leftward halfedge
                    bool a_to_b_leftward = q1.x > q2.x;  // oriented along arc a->b
                    best_face = he_face.at({static_cast<int>(ai),
                                            a_to_b_leftward ? 0 : 1});
                }
            }
        }
        out.push_back(found ? best_face : arr.unbounded_face());
    }
    return out;
}

/// |V_in(f; sub)| per face: how many of the given host vertices lie inside
/// each face (vertices must not sit on the subdivision being queried).
inline std::vector<int> v_in_counts(const Arrangement& arr,
                                    const std::vector<Pt>& vertex_positions) {
    auto where = locate(arr, vertex_positions);
    std::vector<int> counts(arr.faces.size(), 0);
    for (int f : where) ++counts[f];
    return counts;
}

struct ParityReport {
    long pairs_checked = 0;
    bool pass = true;
    std::string witness;
};

/// Observation-style parity check: every pair of vertex-disjoint cycles of
/// the host graph crosses an even number of times in the drawing.
inline ParityReport cycle_parity_check(const PolylineDrawing& d) {
    const auto& g = d.graph;
    if (g.n() > 16)
        throw std::invalid_argument("cycle enumeration capped at 16 vertices");
    auto cycles = all_cycles(g);
    auto recs = crossings(d);
    ParityReport rep;
    std::vector<std::uint32_t> vmask;
    std::vector<std::vector<int>> emask;
    for (const auto& c : cycles) {
        std::uint32_t vm = 0;
        std::vector<int> edges;
        for (size_t i = 0; i < c.size(); ++i) {
            vm |= 1u << c[i];
            edges.push_back(g.edge_index(c[i], c[(i + 1) % c.size()]));
        }
        vmask.push_back(vm);
        std::sort(edges.begin(), edges.end());
        emask.push_back(edges);
    }
    auto in_cycle = [&](int cyc, int e) {
        return std::binary_search(emask[cyc].begin(), emask[cyc].end(), e);
    };
    for (size_t i = 0; i < cycles.size(); ++i)
        for (size_t j = i + 1; j < cycles.size(); ++j) {
            if (vmask[i] & vmask[j]) continue;
            ++rep.pairs_checked;
            int cnt = 0;
            for (const auto& r : recs) {
                if ((in_cycle(i, r.e1) && in_cycle(j, r.e2)) ||
                    (in_cycle(i, r.e2) && in_cycle(j, r.e1)))
                    ++cnt;
            }
            if (cnt % 2) {
                rep.pass = false;
                rep.witness = "cycle pair with odd crossing count " +
                              std::to_string(cnt);
                return rep;
            }
        }
    return rep;
}

}  // namespace cubecross
