// Exact-coordinate polyline drawings: crossing detection and counting,
// good-drawing validation, crossing-count partitions, SVG export.
#pragma once

#include <fstream>
#include <map>
#include <sstream>

#include "cubecross/geometry.hpp"
#include "cubecross/graph.hpp"

namespace cubecross {

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Drawing of a graph: one exact point per vertex, per-edge bend points.
/// Bends are stored oriented from edges()[e].first to edges()[e].second.
struct PolylineDrawing {
    Graph graph;
    std::vector<Pt> pos;
    std::vector<std::vector<Pt>> bends;

    /// The full point chain of edge e, endpoints included.
    std::vector<Pt> polyline(int e) const {
        auto [u, v] = graph.edges()[e];
        std::vector<Pt> out{pos[u]};
        if (e < static_cast<int>(bends.size()))
            out.insert(out.end(), bends[e].begin(), bends[e].end());
        out.push_back(pos[v]);
        return out;
    }
};

/// Throws unless the basic drawing invariants hold: distinct vertex
/// positions, no zero-length segments, no edge through a foreign vertex.
inline void check_drawing(const PolylineDrawing& d) {
    const auto& g = d.graph;
    if (static_cast<int>(d.pos.size()) != g.n())
        throw GeometryError("position count != n");
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (d.pos[u] == d.pos[v])
                throw GeometryError("coincident vertex positions " +
                                    std::to_string(u) + "," + std::to_string(v));
    for (int e = 0; e < g.m(); ++e) {
        auto pts = d.polyline(e);
        for (size_t i = 0; i + 1 < pts.size(); ++i) {
            if (pts[i] == pts[i + 1]) throw GeometryError("zero-length segment");
            for (int v = 0; v < g.n(); ++v) {
                if (v == g.edges()[e].first || v == g.edges()[e].second) {
                    // endpoints may only appear at the chain ends
                    bool interior = i > 0 && i + 1 < pts.size() - 1;
                    if (interior && on_segment(d.pos[v], pts[i], pts[i + 1]) &&
                        d.pos[v] != pts[i] && d.pos[v] != pts[i + 1])
                        throw GeometryError("edge revisits its endpoint");
                    continue;
                }
                if (on_segment(d.pos[v], pts[i], pts[i + 1]))
                    throw GeometryError("edge " + std::to_string(e) +
                                        " passes through vertex " + std::to_string(v));
            }
        }
    }
}

struct CrossingRecord {
    int e1 = 0, e2 = 0;  // edge indices, e1 < e2
    Pt point;
    int seg1 = 0, seg2 = 0;  // segment index within each polyline
    Rat t1, t2;              // parameter inside that segment
};

/// All proper crossings between non-adjacent edge pairs. Touching or
/// overlapping configurations are degeneracies and raise GeometryError.
inline std::vector<CrossingRecord> crossings(const PolylineDrawing& d) {
    const auto& g = d.graph;
    std::vector<CrossingRecord> out;
    for (int e1 = 0; e1 < g.m(); ++e1) {
        auto p1 = d.polyline(e1);
        auto [a1, b1] = g.edges()[e1];
        for (int e2 = e1 + 1; e2 < g.m(); ++e2) {
            auto [a2, b2] = g.edges()[e2];
            if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) continue;
            auto p2 = d.polyline(e2);
            for (size_t i = 0; i + 1 < p1.size(); ++i)
                for (size_t j = 0; j + 1 < p2.size(); ++j) {
                    auto hit = seg_intersect(p1[i], p1[i + 1], p2[j], p2[j + 1]);
                    if (hit.kind == SegHit::None) continue;
                    if (hit.kind != SegHit::Proper) {
                        // a bend landing exactly on the other edge shows up as
                        // Touch on two consecutive segment pairs
                        throw GeometryError("degenerate contact between edges " +
                                            std::to_string(e1) + " and " +
                                            std::to_string(e2));
                    }
                    out.push_back({e1, e2, hit.point, static_cast<int>(i),
                                   static_cast<int>(j), hit.t1, hit.t2});
                }
        }
    }
    return out;
}

inline int crossing_count(const PolylineDrawing& d) {
    return static_cast<int>(crossings(d).size());
}

struct GoodnessReport {
    std::vector<std::string> self_crossing;
    std::vector<std::string> adjacent_crossing;
    std::vector<std::string> multi_crossing;   // pair crossing >= 2 times
    std::vector<std::string> triple_points;
    std::vector<std::string> through_vertex;
    std::vector<std::string> degenerate;       // touches / overlaps

    bool good() const {
        return self_crossing.empty() && adjacent_crossing.empty() &&
               multi_crossing.empty() && triple_points.empty() &&
               through_vertex.empty() && degenerate.empty();
    }
};

/// Total validation against the good-drawing conditions; never throws,
/// every violation becomes a witness string.
inline GoodnessReport validate_good(const PolylineDrawing& d) {
    const auto& g = d.graph;
    GoodnessReport rep;
    auto tag = [](int e1, int e2) {
        return "edges " + std::to_string(e1) + "," + std::to_string(e2);
    };

    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (d.pos[u] == d.pos[v])
                rep.degenerate.push_back("coincident vertices " + std::to_string(u) +
                                         "," + std::to_string(v));

    // edge through foreign vertex
    for (int e = 0; e < g.m(); ++e) {
        auto pts = d.polyline(e);
        for (size_t i = 0; i + 1 < pts.size(); ++i)
            for (int v = 0; v < g.n(); ++v) {
                if (v == g.edges()[e].first || v == g.edges()[e].second) continue;
                if (on_segment(d.pos[v], pts[i], pts[i + 1]))
                    rep.through_vertex.push_back("edge " + std::to_string(e) +
                                                 " through vertex " + std::to_string(v));
            }
    }

    // self-crossing: non-consecutive segment pairs of one edge
    for (int e = 0; e < g.m(); ++e) {
        auto pts = d.polyline(e);
        for (size_t i = 0; i + 1 < pts.size(); ++i)
            for (size_t j = i + 1; j + 1 < pts.size(); ++j) {
                auto hit = seg_intersect(pts[i], pts[i + 1], pts[j], pts[j + 1]);
                if (hit.kind == SegHit::None) continue;
                if (j == i + 1 && hit.kind == SegHit::Touch && hit.point == pts[j])
                    continue;  // shared bend
                rep.self_crossing.push_back("edge " + std::to_string(e));
            }
    }

    std::map<Pt, std::vector<std::pair<int, int>>> at_point;
    for (int e1 = 0; e1 < g.m(); ++e1) {
        auto p1 = d.polyline(e1);
        auto [a1, b1] = g.edges()[e1];
        for (int e2 = e1 + 1; e2 < g.m(); ++e2) {
            auto [a2, b2] = g.edges()[e2];
            bool adjacent = a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2;
            auto p2 = d.polyline(e2);
            int proper = 0;
            for (size_t i = 0; i + 1 < p1.size(); ++i)
                for (size_t j = 0; j + 1 < p2.size(); ++j) {
                    auto hit = seg_intersect(p1[i], p1[i + 1], p2[j], p2[j + 1]);
                    if (hit.kind == SegHit::None) continue;
                    if (hit.kind == SegHit::Overlap) {
                        rep.degenerate.push_back(tag(e1, e2) + " overlap");
                        continue;
                    }
                    bool shared_endpoint =
                        adjacent && (hit.point == p1.front() || hit.point == p1.back());
                    if (hit.kind == SegHit::Touch) {
                        if (!shared_endpoint)
                            rep.degenerate.push_back(tag(e1, e2) + " touch");
                        continue;
                    }
                    ++proper;
                    at_point[hit.point].push_back({e1, e2});
                    if (adjacent)
                        rep.adjacent_crossing.push_back(tag(e1, e2));
                }
            if (proper >= 2) rep.multi_crossing.push_back(tag(e1, e2));
        }
    }
    for (const auto& [pt, pairs] : at_point)
        if (pairs.size() >= 2)
            rep.triple_points.push_back("point shared by " +
                                        std::to_string(pairs.size()) + " crossings");
    return rep;
}

struct NuPartition {
    std::vector<std::vector<int>> matrix;  // matrix[i][j]: nu(Ai, Aj); diag nu(Ai)
    int total = 0;
};

/// nu_D restricted to a partition of the edge set: matrix[i][i] counts
/// crossings inside part i, matrix[i][j] crossings between parts.
inline NuPartition nu_partition(const PolylineDrawing& d,
                                const std::vector<std::vector<int>>& parts) {
    std::vector<int> owner(d.graph.m(), -1);
    for (size_t i = 0; i < parts.size(); ++i)
        for (int e : parts[i]) {
            if (e < 0 || e >= d.graph.m() || owner[e] >= 0)
                throw std::invalid_argument("parts do not partition the edge set");
            owner[e] = static_cast<int>(i);
        }
    for (int e = 0; e < d.graph.m(); ++e)
        if (owner[e] < 0)
            throw std::invalid_argument("parts do not partition the edge set");
    NuPartition np;
    np.matrix.assign(parts.size(), std::vector<int>(parts.size(), 0));
    for (const auto& c : crossings(d)) {
        int i = owner[c.e1], j = owner[c.e2];
        ++np.matrix[std::min(i, j)][std::max(i, j)];
        ++np.total;
    }
    return np;
}

struct SvgOptions {
    double width = 800;
    bool mark_crossings = true;
    bool vertex_labels = true;
};

inline void export_svg(const PolylineDrawing& d, std::ostream& os,
                       const SvgOptions& opt = {}) {
    const auto& g = d.graph;
    double minx = 0, miny = 0, maxx = 1, maxy = 1;
    bool first = true;
    auto see = [&](const Pt& p) {
        double x = static_cast<double>(p.x), y = static_cast<double>(p.y);
        if (first) { minx = maxx = x; miny = maxy = y; first = false; }
        minx = std::min(minx, x); maxx = std::max(maxx, x);
        miny = std::min(miny, y); maxy = std::max(maxy, y);
    };
    for (const auto& p : d.pos) see(p);
    for (const auto& route : d.bends)
        for (const auto& p : route) see(p);
    double span = std::max({maxx - minx, maxy - miny, 1e-9});
    double scale = (opt.width - 80) / span;
    auto X = [&](const Pt& p) { return 40 + (static_cast<double>(p.x) - minx) * scale; };
    auto Y = [&](const Pt& p) {
        return opt.width - 40 - (static_cast<double>(p.y) - miny) * scale;
    };
    double h = (maxy - miny) * scale + 80;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width
       << "\" height=\"" << h << "\">\n";
    for (int e = 0; e < g.m(); ++e) {
        os << "  <polyline fill=\"none\" stroke=\"black\" points=\"";
        for (const auto& p : d.polyline(e)) os << X(p) << "," << Y(p) << " ";
        os << "\"/>\n";
    }
    if (opt.mark_crossings) {
        for (const auto& c : crossings(d))
            os << "  <circle cx=\"" << X(c.point) << "\" cy=\"" << Y(c.point)
               << "\" r=\"3\" fill=\"red\"/>\n";
    }
    for (int v = 0; v < g.n(); ++v) {
        os << "  <circle cx=\"" << X(d.pos[v]) << "\" cy=\"" << Y(d.pos[v])
           << "\" r=\"6\" fill=\"white\" stroke=\"black\"/>\n";
        if (opt.vertex_labels) {
            std::string label =
                g.has_labels() ? g.label(v) : std::to_string(v);
            os << "  <text x=\"" << X(d.pos[v]) + 8 << "\" y=\"" << Y(d.pos[v]) - 8
               << "\" font-size=\"11\">" << label << "</text>\n";
        }
    }
    os << "</svg>\n";
}

inline void export_svg_file(const PolylineDrawing& d, const std::string& path,
                            const SvgOptions& opt = {}) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    export_svg(d, os, opt);
}

}  // namespace cubecross
