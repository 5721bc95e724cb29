// cubecross command line: generate cube-family graphs, test isomorphism,
// replay the counting lemmas, bound crossing numbers, verify artifacts.
// Exit codes: 0 ok, 1 negative answer, 2 error.
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "cubecross/cubes.hpp"
#include "cubecross/io.hpp"
#include "cubecross/lemmas.hpp"
#include "cubecross/realize.hpp"
#include "cubecross/solver.hpp"

namespace {

using namespace cubecross;

CubeFamily parse_family(const std::string& s) {
    if (s == "Q") return CubeFamily::Q;
    if (s == "CQ") return CubeFamily::CQ;
    if (s == "LTQ") return CubeFamily::LTQ;
    if (s == "MQ") return CubeFamily::MQ;
    throw std::invalid_argument("unknown family: " + s + " (Q, CQ, LTQ, MQ)");
}

// budget strings: "60s" wall clock, plain integer = node limit
Budget parse_budget(const std::string& s) {
    Budget b;
    if (s.empty()) return b;
    if (s.back() == 's')
        b.max_seconds = std::stod(s.substr(0, s.size() - 1));
    else
        b.max_nodes = std::stol(s);
    return b;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

int cmd_gen(const std::string& family, int order, int variant,
            const std::string& out) {
    CubeSpec spec{parse_family(family), order, variant};
    emit(write_graph(generate(spec)), out);
    return 0;
}

int cmd_iso(const std::string& file_a, const std::string& file_b, bool quiet) {
    auto a = read_graph_file(file_a);
    auto b = read_graph_file(file_b);
    auto mapping = is_isomorphic(a, b);
    if (!mapping) {
        std::cout << "not isomorphic\n";
        return 1;
    }
    std::cout << "isomorphic\n";
    if (!quiet)
        for (int v = 0; v < a.n(); ++v)
            std::cout << v << " -> " << (*mapping)[v] << "\n";
    return 0;
}

int cmd_lemmas(const std::string& family, int order, int variant,
               const std::string& file, const std::string& filter) {
    Graph g = file.empty() ? generate({parse_family(family), order, variant})
                           : read_graph_file(file);
    using Check = std::function<LemmaReport(const Graph&, const std::string&)>;
    const std::vector<std::pair<std::string, Check>> checks = {
        {"2.4", check_lemma_2_4},   {"2.5", check_lemma_2_5},
        {"2.6", check_lemma_2_6},   {"2.7", check_lemma_2_7},
        {"2.8", check_lemma_2_8},   {"2.9", check_lemma_2_9},
        {"obs2.1", check_obs_2_1},  {"obs3.1", check_obs_3_1},
        {"obs4.1", check_obs_4_1},  {"obs4.2", check_obs_4_2},
        {"obs4.3", check_obs_4_3},  {"obs4.4", check_obs_4_4},
    };
    bool any_selected = false, all_pass = true;
    for (const auto& [id, fn] : checks) {
        if (!filter.empty() && filter != id) continue;
        any_selected = true;
        try {
            auto rep = fn(g, id);
            std::cout << id << ": " << (rep.pass ? "pass" : "FAIL") << " ("
                      << rep.cases << " cases)";
            if (!rep.pass) {
                std::cout << " witness: " << rep.witness;
                all_pass = false;
            }
            if (!rep.notes.empty()) std::cout << " [" << rep.notes << "]";
            std::cout << "\n";
        } catch (const std::invalid_argument& ex) {
            if (filter.empty()) {
                std::cout << id << ": skipped (" << ex.what() << ")\n";
            } else {
                std::cout << id << ": precondition mismatch: " << ex.what() << "\n";
                all_pass = false;
            }
        }
    }
    if (!any_selected) throw std::invalid_argument("unknown lemma id: " + filter);
    return all_pass ? 0 : 1;
}

int cmd_cr(const std::string& file, const std::string& mode,
           const std::string& budget_str, int effort, unsigned seed,
           const std::string& out, const std::string& svg_out,
           const std::string& drawing_out) {
    auto g = read_graph_file(file);
    Budget budget = parse_budget(budget_str);
    auto t0 = std::chrono::steady_clock::now();

    CrResult res;
    if (mode == "upper") {
        res.lower = is_planar_quick(g) ? 0 : std::max(1, euler_girth_bound(g));
        auto ub = cr_upper_bound(g, seed, effort);
        res.upper = ub.crossings;
        res.certificate = ub.certificate;
        res.exact = res.lower == res.upper;
    } else {
        res = crossing_number(g, budget, seed, effort);
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0).count();

    auto record = result_to_json(g, res, seed, secs, file);
    emit(record.dump(2) + "\n", out);

    if ((!svg_out.empty() || !drawing_out.empty()) && res.certificate) {
        auto d = realize_drawing(g, *res.certificate);
        if (!drawing_out.empty()) write_drawing_file(d, drawing_out);
        if (!svg_out.empty()) export_svg_file(d, svg_out);
    }
    if (mode == "exact" && !res.exact) {
        std::cerr << "budget exhausted: certified bracket [" << res.lower
                  << ", " << res.upper << "] only\n";
        return 1;
    }
    return 0;
}

int cmd_verify(const std::string& graph_file, const std::string& drawing_file,
               const std::string& record_file) {
    auto g = read_graph_file(graph_file);
    if (!drawing_file.empty()) {
        auto d = read_drawing_file(drawing_file);
        if (!(d.graph.n() == g.n() && d.graph.edges() == g.edges())) {
            std::cout << "drawing graph does not match graph file\n";
            return 1;
        }
        check_drawing(d);
        auto rep = validate_good(d);
        if (!rep.good()) {
            std::cout << "drawing is not good\n";
            return 1;
        }
        int actual = crossing_count(d);
        std::ifstream in(drawing_file);
        auto j = nlohmann::json::parse(in);
        if (j.contains("crossings") && j["crossings"].get<int>() != actual) {
            std::cout << "claimed " << j["crossings"].get<int>()
                      << " crossings, drawing has " << actual << "\n";
            return 1;
        }
        std::cout << "drawing ok: " << actual << " crossings\n";
        return 0;
    }
    std::ifstream in(record_file);
    if (!in) throw std::runtime_error("cannot open " + record_file);
    auto j = nlohmann::json::parse(in);
    if (!j.contains("certificate")) {
        std::cout << "record has no certificate\n";
        return 1;
    }
    auto cert = certificate_from_json(j["certificate"]);
    try {
        if (!verify_certificate(g, cert)) {
            std::cout << "certificate host is not planar\n";
            return 1;
        }
    } catch (const std::invalid_argument& ex) {
        std::cout << "certificate does not fit the graph: " << ex.what() << "\n";
        return 1;
    }
    int claimed = j.at("upper").get<int>();
    if (static_cast<int>(cert.crossings.size()) != claimed) {
        std::cout << "certificate has " << cert.crossings.size()
                  << " crossings, record claims " << claimed << "\n";
        return 1;
    }
    std::cout << "certificate ok: " << cert.crossings.size() << " crossings\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"crossing-number workbench for hypercube variants"};
    app.require_subcommand(1);

    std::string family, file_a, file_b, file, out, svg_out, drawing_out;
    std::string filter, mode_budget, record_file;
    int order = 0, variant = 0, effort = 64;
    unsigned seed = 1;
    bool quiet = false;

    const char* env_budget = std::getenv("CUBECROSS_BUDGET");
    std::string budget_str = env_budget ? env_budget : "";

    auto* gen = app.add_subcommand("gen", "generate a cube-family graph");
    gen->add_option("family", family, "Q, CQ, LTQ or MQ")->required();
    gen->add_option("order", order, "dimension n")->required();
    gen->add_option("--variant", variant, "MQ variant (0 or 1)");
    gen->add_option("-o,--out", out, "output file (default stdout)");

    auto* iso = app.add_subcommand("iso", "isomorphism test for two graph files");
    iso->add_option("a", file_a)->required();
    iso->add_option("b", file_b)->required();
    iso->add_flag("-q,--quiet", quiet, "suppress the mapping printout");

    auto* lem = app.add_subcommand("lemmas", "replay the counting lemmas");
    lem->add_option("family", family, "Q, CQ, LTQ or MQ");
    lem->add_option("order", order, "dimension n");
    lem->add_option("--variant", variant, "MQ variant");
    lem->add_option("--file", file, "graph file instead of family/order");
    lem->add_option("--lemma", filter, "run one lemma only (e.g. 2.4, obs4.4)");

    auto* cr = app.add_subcommand("cr", "crossing number bounds");
    cr->add_option("file", file, "graph file")->required();
    bool f_exact = false, f_upper = false, f_bounds = false;
    cr->add_flag("--exact", f_exact, "demand the exact value");
    cr->add_flag("--upper", f_upper, "heuristic upper bound only");
    cr->add_flag("--bounds", f_bounds, "certified bracket (default)");
    cr->add_option("--budget", budget_str,
                   "search budget: '60s' wall clock or node count "
                   "(env CUBECROSS_BUDGET)");
    cr->add_option("--effort", effort, "heuristic restarts");
    cr->add_option("--seed", seed, "random seed");
    cr->add_option("-o,--out", out, "result record file (default stdout)");
    cr->add_option("--svg", svg_out, "also export an SVG of the drawing");
    cr->add_option("--drawing", drawing_out, "also export the drawing JSON");

    auto* ver = app.add_subcommand("verify", "re-check a drawing or result record");
    ver->add_option("--graph", file, "graph file")->required();
    ver->add_option("--drawing", drawing_out, "drawing JSON to verify");
    ver->add_option("--record", record_file, "result record to verify");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(family, order, variant, out);
        if (iso->parsed()) return cmd_iso(file_a, file_b, quiet);
        if (lem->parsed()) {
            if (file.empty() && family.empty())
                throw std::invalid_argument("need family/order or --file");
            return cmd_lemmas(family, order, variant, file, filter);
        }
        if (cr->parsed()) {
            if (f_exact + f_upper + f_bounds > 1)
                throw std::invalid_argument("pick one of --exact/--upper/--bounds");
            std::string mode = f_exact ? "exact" : f_upper ? "upper" : "bounds";
            return cmd_cr(file, mode, budget_str, effort, seed, out, svg_out,
                          drawing_out);
        }
        if (ver->parsed()) {
            if (drawing_out.empty() == record_file.empty())
                throw std::invalid_argument("need exactly one of --drawing/--record");
            return cmd_verify(file, drawing_out, record_file);
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
