#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "fpq/dp.hpp"
#include "fpq/generators.hpp"
#include "fpq/nodetrix.hpp"
#include "fpq/oracle.hpp"
#include "fpq/spqr.hpp"

using namespace fpq;
using nlohmann::json;

namespace {

enum Exit { kYes = 0, kNo = 1, kUsage = 2, kUnsupported = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        default: return "unsupported";
    }
}

int exit_of(Verdict v) { return v == Verdict::Yes ? kYes : v == Verdict::No ? kNo : kUnsupported; }

json witness_json(const ChoosableGraph& cg, const Witness& w) {
    Labels lab = edge_labels(cg.g);
    json a = json::object(), r = json::object();
    for (int v = 0; v < cg.g.n(); ++v) {
        a[cg.g.name(v)] = {{"index", w.assignment[v]}, {"tree", to_sexpr(cg.D[v][w.assignment[v]], &lab)}};
        json ord = json::array();
        for (int e : w.rotation[v]) ord.push_back(cg.g.edge(e).id);
        r[cg.g.name(v)] = ord;
    }
    return {{"assignment", a}, {"rotation", r}};
}

int cmd_test(const std::string& file, bool oracle, bool want_witness, bool as_json, bool dump) {
    auto cg = parse_choosable(slurp(file));
    auto an = analyze(cg, {}, want_witness);
    json rep;
    rep["command"] = "test";
    rep["file"] = file;
    rep["verdict"] = verdict_name(an.verdict);
    if (!an.reason.empty()) rep["reason"] = an.reason;
    rep["params"] = {{"n", cg.g.n()}, {"m", cg.g.m()}, {"d_max", cg.d_max()}, {"width", an.width}};
    rep["timings_ms"] = an.timings_ms;
    json ps = json::array();
    for (auto& [node, size] : an.psi_sizes) ps.push_back({{"node", node}, {"size", size}});
    rep["psi_sizes"] = ps;
    if (an.witness) {
        if (!witness_valid(cg, *an.witness)) throw std::logic_error("invalid witness");
        rep["witness"] = witness_json(cg, *an.witness);
    }
    if (oracle) {
        try {
            bool o = oracle_test(cg);
            rep["oracle"] = {{"verdict", o ? "yes" : "no"},
                             {"agreement", an.verdict == Verdict::Unsupported || o == (an.verdict == Verdict::Yes)}};
        } catch (const CapExceeded& e) {
            rep["oracle"] = {{"skipped", e.what()}};
        }
    }
    if (as_json) {
        std::cout << rep.dump(2) << "\n";
    } else {
        std::cout << rep["verdict"].get<std::string>();
        if (rep.contains("reason")) std::cout << " (" << an.reason << ")";
        std::cout << "\nn=" << cg.g.n() << " m=" << cg.g.m() << " d_max=" << cg.d_max() << " width=" << an.width << "\n";
        for (auto& [k, v] : an.timings_ms) std::cout << k << " " << v << " ms\n";
        if (an.witness) {
            Labels lab = edge_labels(cg.g);
            for (int v = 0; v < cg.g.n(); ++v) {
                std::cout << cg.g.name(v) << ": " << to_sexpr(cg.D[v][an.witness->assignment[v]], &lab) << " ->";
                for (int e : an.witness->rotation[v]) std::cout << " " << cg.g.edge(e).id;
                std::cout << "\n";
            }
        }
        if (rep.contains("oracle")) std::cout << "oracle " << rep["oracle"].dump() << "\n";
    }
    if (dump && an.verdict != Verdict::Unsupported && an.planar) std::cerr << decompose(cg.g).dump();
    return exit_of(an.verdict);
}

int cmd_info(const std::string& file) {
    auto cg = parse_choosable(slurp(file));
    Labels lab = edge_labels(cg.g);
    std::cout << "n=" << cg.g.n() << " m=" << cg.g.m() << " d_max=" << cg.d_max() << "\n";
    bool bic = is_biconnected(cg.g), planar = is_planar_graph(cg.g);
    std::cout << "biconnected=" << bic << " planar=" << planar << "\n";
    if (!bic || !planar || cg.g.m() < 2) return bic ? kNo : kUnsupported;
    auto t = decompose(cg.g);
    std::cout << t.dump();
    for (int v = 0; v < cg.g.n(); ++v) {
        std::cout << "embedding tree " << cg.g.name(v) << ": " << to_sexpr(embedding_tree(t, v), &lab) << "\n";
        for (auto& T : cg.D[v]) std::cout << "  D: " << to_sexpr(T, &lab) << "\n";
    }
    auto pre = preprocess(cg, t);
    if (!pre) {
        std::cout << "preprocessing: some vertex keeps no tree\n";
        return kNo;
    }
    for (int v = 0; v < cg.g.n(); ++v) std::cout << "kept " << cg.g.name(v) << ": " << pre->orig[v].size() << "\n";
    return kYes;
}

json layout_json(const NodeTrixGraph& ntg, const MatrixLayout& lay) {
    json out = json::object();
    for (size_t c = 0; c < ntg.clusters.size(); ++c) {
        json perm = json::array(), sides = json::object();
        for (int v : lay.perm[c]) perm.push_back(ntg.clusters[c][v]);
        for (size_t v = 0; v < ntg.clusters[c].size(); ++v) {
            json s = json::object();
            for (int k = 0; k < 4; ++k)
                if (!lay.attach[c][v][k].empty()) s[side_name((Side)k)] = lay.attach[c][v][k];
            if (!s.empty()) sides[ntg.clusters[c][v]] = s;
        }
        out[ntg.cluster_ids[c]] = {{"permutation", perm}, {"sides", sides}};
    }
    return out;
}

int cmd_ntx(const std::string& file, bool free_sides, bool want_witness, bool as_json) {
    auto ntg = parse_nodetrix(slurp(file));
    NtResult r;
    try {
        r = free_sides ? test_free_sides(ntg, want_witness) : test_fixed_sides(ntg, want_witness);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (r.layout && !layout_valid(ntg, *r.layout, free_sides)) throw std::logic_error("invalid layout");
    json rep;
    rep["command"] = "ntx test";
    rep["file"] = file;
    rep["verdict"] = verdict_name(r.verdict);
    if (!r.reason.empty()) rep["reason"] = r.reason;
    rep["params"] = {{"clusters", ntg.clusters.size()}, {"edges", ntg.edges.size()}, {"d_max", r.d_max}, {"free_sides", free_sides}};
    if (r.layout) rep["layout"] = layout_json(ntg, *r.layout);
    if (as_json) {
        std::cout << rep.dump(2) << "\n";
    } else {
        std::cout << verdict_name(r.verdict);
        if (!r.reason.empty()) std::cout << " (" << r.reason << ")";
        std::cout << "\nd_max=" << r.d_max << "\n";
        if (r.layout)
            for (auto& [c, l] : rep["layout"].items()) std::cout << c << " " << l.dump() << "\n";
    }
    return exit_of(r.verdict);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"FPQ-choosable planarity tester"};
    app.require_subcommand(1);

    std::string file;
    bool oracle = false, witness = false, as_json = false, dump = false;
    auto* t = app.add_subcommand("test", "decide an instance");
    t->add_option("file", file, "instance file")->required();
    t->add_flag("--oracle", oracle, "also run the exhaustive check");
    t->add_flag("--witness", witness, "report an assignment and rotation system");
    t->add_flag("--json", as_json, "JSON report");
    t->add_flag("--dump", dump, "print the SPQR tree to stderr");

    auto* info = app.add_subcommand("info", "SPQR tree, embedding trees and preprocessing");
    info->add_option("file", file, "instance file")->required();

    auto* gen = app.add_subcommand("gen", "write a generated instance to stdout");
    gen->require_subcommand(1);
    bool p_only = false;
    auto* g3 = gen->add_subcommand("3ec", "edge 3-coloring reduction of a drawn cubic graph");
    g3->add_option("drawing", file, "drawing file")->required();
    g3->add_flag("--p-only", p_only, "P-node-only variant");
    auto* gl = gen->add_subcommand("listcol", "list-coloring reduction");
    gl->add_option("instance", file, "list-coloring file; random when omitted");
    gl->add_flag("--p-only", p_only, "P-node-only variant");
    uint64_t seed = 1;
    int colors = 3;
    RandomParams rp;
    bool m_set = false;
    gl->add_option("--seed", seed);
    gl->add_option("--n", rp.n, "vertices of the random instance");
    gl->add_option("--colors", colors);
    auto* gr = gen->add_subcommand("random", "random choosable instance");
    gr->add_option("--seed", seed);
    gr->add_option("--n", rp.n);
    auto* mopt = gr->add_option("--m", rp.m, "edges (default n+3)");
    gr->add_option("--d-max", rp.d_max);
    gr->add_option("--tree-size", rp.tree_size, "max children of a tree node");
    gr->add_option("--p-planar", rp.p_planar);

    bool free_sides = false;
    auto* ntx = app.add_subcommand("ntx", "NodeTrix planarity");
    ntx->require_subcommand(1);
    auto* nt = ntx->add_subcommand("test", "test a flat clustered graph");
    nt->add_option("file", file, "NodeTrix file")->required();
    nt->add_flag("--free-sides", free_sides, "choose the sides of the edges too");
    nt->add_flag("--witness", witness, "report permutations and side orders");
    nt->add_flag("--json", as_json, "JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (t->parsed()) return cmd_test(file, oracle, witness, as_json, dump);
        if (info->parsed()) return cmd_info(file);
        if (g3->parsed()) {
            std::cout << format_choosable(gen_3ec(parse_drawing(slurp(file)), p_only));
            return kYes;
        }
        if (gl->parsed()) {
            auto inst = file.empty() ? random_listcol(seed, rp.n, colors) : parse_listcol(slurp(file));
            std::cout << format_choosable(gen_listcol(inst, p_only));
            return kYes;
        }
        if (gr->parsed()) {
            m_set = mopt->count() > 0;
            if (!m_set) rp.m = rp.n + 3;
            std::cout << "# gen random --seed " << seed << " --n " << rp.n << " --m " << rp.m << " --d-max " << rp.d_max
                      << " --tree-size " << rp.tree_size << " --p-planar " << rp.p_planar << "\n";
            std::cout << format_choosable(gen_random(seed, rp));
            return kYes;
        }
        if (nt->parsed()) return cmd_ntx(file, free_sides, witness, as_json);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
