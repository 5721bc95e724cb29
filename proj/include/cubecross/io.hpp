// File formats: the plain-text graph format, JSON drawings with exact
// rational coordinates, and JSON result records for solver runs.
#pragma once

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cubecross/drawing.hpp"
#include "cubecross/solver.hpp"

namespace cubecross {

/// Text format: `p <n> <m>`, optional `l <v> <bitstring>` per vertex,
/// `e <u> <v>` per edge, `#` comments. Serialization is canonical: labels
/// by vertex, edges sorted.
inline std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.n() << " " << g.m() << "\n";
    if (g.has_labels())
        for (int v = 0; v < g.n(); ++v) out << "l " << v << " " << g.label(v) << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

inline Graph parse_graph(std::istream& in) {
    std::string line;
    int n = -1, m = -1;
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "p") {
            if (n >= 0 || !(ls >> n >> m) || n < 0 || m < 0)
                throw std::invalid_argument("bad p line");
        } else if (tag == "l") {
            if (n < 0) throw std::invalid_argument("l line before p line");
            int v;
            std::string bits;
            if (!(ls >> v >> bits) || v < 0 || v >= n)
                throw std::invalid_argument("bad l line");
            labels.resize(n);
            labels[v] = bits;
        } else if (tag == "e") {
            int u, v;
            if (n < 0 || !(ls >> u >> v)) throw std::invalid_argument("bad e line");
            edges.push_back({std::min(u, v), std::max(u, v)});
        } else {
            throw std::invalid_argument("unknown line tag: " + tag);
        }
    }
    if (n < 0) throw std::invalid_argument("missing p line");
    if (static_cast<int>(edges.size()) != m)
        throw std::invalid_argument("edge count does not match header");
    if (!labels.empty())
        for (const auto& l : labels)
            if (l.empty()) throw std::invalid_argument("partial labeling");
    return Graph::make(n, edges, labels);
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_graph(in);
}

inline void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << write_graph(g);
}

namespace detail {

inline nlohmann::json pt_json(const Pt& p) {
    return {rat_to_string(p.x), rat_to_string(p.y)};
}

inline Pt pt_from_json(const nlohmann::json& j) {
    return {rat_from_string(j.at(0).get<std::string>()),
            rat_from_string(j.at(1).get<std::string>())};
}

}  // namespace detail

/// JSON drawing: inline graph plus exact rational coordinates as
/// "num/den" strings. Round-trips bit-exactly.
inline nlohmann::json drawing_to_json(const PolylineDrawing& d) {
    nlohmann::json jg;
    jg["n"] = d.graph.n();
    jg["edges"] = nlohmann::json::array();
    for (auto [u, v] : d.graph.edges()) jg["edges"].push_back({u, v});
    if (d.graph.has_labels()) {
        jg["labels"] = nlohmann::json::array();
        for (int v = 0; v < d.graph.n(); ++v) jg["labels"].push_back(d.graph.label(v));
    }
    nlohmann::json j;
    j["graph"] = jg;
    j["crossings"] = crossing_count(d);
    j["pos"] = nlohmann::json::array();
    for (const auto& p : d.pos) j["pos"].push_back(detail::pt_json(p));
    j["bends"] = nlohmann::json::array();
    for (const auto& bl : d.bends) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& p : bl) row.push_back(detail::pt_json(p));
        j["bends"].push_back(row);
    }
    return j;
}

inline PolylineDrawing drawing_from_json(const nlohmann::json& j) {
    const auto& jg = j.at("graph");
    std::vector<Edge> edges;
    for (const auto& e : jg.at("edges"))
        edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    std::vector<std::string> labels;
    if (jg.contains("labels"))
        labels = jg.at("labels").get<std::vector<std::string>>();
    PolylineDrawing d;
    d.graph = Graph::make(jg.at("n").get<int>(), edges, labels);
    for (const auto& p : j.at("pos")) d.pos.push_back(detail::pt_from_json(p));
    for (const auto& row : j.at("bends")) {
        std::vector<Pt> bl;
        for (const auto& p : row) bl.push_back(detail::pt_from_json(p));
        d.bends.push_back(std::move(bl));
    }
    if (static_cast<int>(d.pos.size()) != d.graph.n() ||
        static_cast<int>(d.bends.size()) != d.graph.m())
        throw std::invalid_argument("drawing arrays do not match graph");
    return d;
}

inline PolylineDrawing read_drawing_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return drawing_from_json(nlohmann::json::parse(in));
}

inline void write_drawing_file(const PolylineDrawing& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << drawing_to_json(d).dump(2) << "\n";
}

inline constexpr const char* kToolVersion = "0.1.0";

/// JSON record of a solver run: bounds, certificate, seed, timing.
inline nlohmann::json result_to_json(const Graph& g, const CrResult& r,
                                     unsigned seed, double seconds,
                                     const std::string& source) {
    nlohmann::json j;
    j["source"] = source;
    j["n"] = g.n();
    j["m"] = g.m();
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    j["exact"] = r.exact;
    j["budget_exhausted"] = r.budget_exhausted;
    j["nodes_explored"] = r.nodes_explored;
    j["seed"] = seed;
    j["seconds"] = seconds;
    j["version"] = kToolVersion;
    if (r.certificate) {
        nlohmann::json cert;
        cert["crossings"] = nlohmann::json::array();
        for (const auto& c : r.certificate->crossings)
            cert["crossings"].push_back({c.e1, c.e2});
        cert["order"] = r.certificate->order;
        j["certificate"] = cert;
    }
    return j;
}

inline Planarization certificate_from_json(const nlohmann::json& j) {
    Planarization p;
    for (const auto& c : j.at("crossings"))
        p.crossings.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
    p.order = j.at("order").get<std::vector<std::vector<int>>>();
    return p;
}

}  // namespace cubecross
