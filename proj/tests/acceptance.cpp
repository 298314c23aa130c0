// acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "all_trees.hpp"
#include "brute.hpp"
#include "colorers.hpp"
#include "fpq/dp.hpp"
#include "fpq/generators.hpp"
#include "fpq/nodetrix.hpp"
#include "fpq/oracle.hpp"
#include "fpq/spqr.hpp"
#include "nt_brute.hpp"

using namespace fpq;

namespace {

using Clock = std::chrono::steady_clock;
double secs(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        if (failures.size() < 5) failures.push_back(what);
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int max_degree(const MultiGraph& g) {
    int d = 0;
    for (int v = 0; v < g.n(); ++v) d = std::max(d, g.degree(v));
    return d;
}

// instances for the equivalence runs: |V| <= 7, |E| <= 12, |D(v)| <= 3, <= 6 leaves per tree
struct InstanceStream {
    std::mt19937 rng{2024};
    uint64_t seed = 100000;
    ChoosableGraph next() {
        for (;;) {
            RandomParams p;
            p.n = 2 + rng() % 6;
            p.m = std::min(12, std::max(p.n, 2) + (int)(rng() % 6));
            p.d_max = 1 + rng() % 3;
            p.tree_size = 2 + rng() % 3;
            if (seed % 2) {
                p.n = 4 + rng() % 4;
                p.m = std::min(12, p.n + 2 + (int)(rng() % 4));
                p.tree_size = 2;
                p.p_planar = 0.3;
            }
            auto cg = gen_random(seed++, p);
            if (max_degree(cg.g) <= 6) return cg;
        }
    }
};

const OracleCaps kCaps{2e6, 1e5};

void master_equivalence(Outcome& o) {
    auto t0 = Clock::now();
    InstanceStream s;
    int done = 0, yes = 0, skipped = 0;
    while (done < 500) {
        auto cg = s.next();
        bool want;
        try {
            want = oracle_test(cg, kCaps);
        } catch (const CapExceeded&) {
            ++skipped;
            continue;
        }
        auto an = analyze(cg, {}, true);
        bool got = an.verdict == Verdict::Yes;
        o.expect(an.verdict != Verdict::Unsupported, "unsupported instance " + std::to_string(s.seed - 1));
        o.expect(got == want, "discrepancy on seed " + std::to_string(s.seed - 1));
        if (got) o.expect(an.witness && witness_valid(cg, *an.witness), "bad witness on seed " + std::to_string(s.seed - 1));
        yes += got;
        ++done;
    }
    double t = secs(t0);
    o.expect(t < 600, "took longer than 10 minutes");
    o.detail << done << " instances (yes " << yes << ", no " << done - yes << ", " << skipped
             << " over the oracle cap), " << (o.pass ? 0 : (int)o.failures.size()) << " discrepancies, " << t << " s";
}

void node_equivalence(Outcome& o) {
    InstanceStream s;
    s.seed = 500000;
    int done = 0, nodes = 0, rejected = 0;
    std::map<std::string, int> by_type;
    while (done < 100) {
        auto cg = s.next();
        auto t = decompose(cg.g);
        auto pre = preprocess(cg, t);
        if (!pre) {
            ++rejected;
            continue;
        }
        DpOptions opt;
        opt.early_exit = false;
        DpEngine dp(pre->cg, t, opt);
        dp.run();
        std::vector<std::pair<int, PsiSet>> want;
        try {
            for (int x : t.postorder())
                if (x != t.root) want.push_back({x, oracle_psi(pre->cg, t, x, kCaps)});
        } catch (const CapExceeded&) {
            continue;
        }
        for (auto& [x, w] : want) {
            o.expect(dp.psi[x] == w, "psi mismatch at " + std::string(node_type_name(t.nodes[x].type)) + "#" +
                                         std::to_string(x) + " seed " + std::to_string(s.seed - 1));
            ++by_type[node_type_name(t.nodes[x].type)];
            ++nodes;
        }
        ++done;
    }
    o.expect(by_type["R"] > 0 && by_type["P"] > 0 && by_type["S"] > 0, "some node type never compared");
    o.detail << done << " instances, " << nodes << " nodes (";
    for (auto& [k, v] : by_type) o.detail << k << " " << v << " ";
    o.detail << "), " << rejected << " rejected by preprocessing not counted";
}

void choice_fixture(Outcome& o) {
    auto both = parse_choosable(slurp("data/choice.graph"));
    auto rev = parse_choosable(slurp("data/choice_reversed_only.graph"));
    auto a = analyze(both, {}, true);
    o.expect(a.verdict == Verdict::Yes, "two-tree instance not yes");
    int u2 = both.g.vertex_index("u2");
    Labels lab = edge_labels(both.g);
    std::string chosen = a.witness ? to_sexpr(both.D[u2][a.witness->assignment[u2]], &lab) : "none";
    o.expect(chosen == "(F a g d)", "witness picks " + chosen);
    o.expect(a.witness && witness_valid(both, *a.witness), "witness invalid");
    auto b = analyze(rev);
    o.expect(b.verdict == Verdict::No, "reversed-only instance not no");
    o.expect(oracle_test(both) && !oracle_test(rev), "oracle disagrees");
    o.detail << "both trees: " << (a.verdict == Verdict::Yes ? "yes" : "no") << " with u2 -> " << chosen
             << "; reversed tree only: " << (b.verdict == Verdict::No ? "no" : "yes");
}

void three_edge_coloring(Outcome& o) {
    auto k4 = parse_drawing(slurp("data/k4.drawing"));
    auto pet = parse_drawing(slurp("data/petersen.drawing"));
    bool k4c = brute::edge_3_colorable(k4.g), petc = brute::edge_3_colorable(pet.g);
    o.expect(k4c && !petc, "colorer sanity");
    o.expect(pet.crossings.size() == 5, "Petersen drawing does not have 5 crossings");
    for (bool p_only : {false, true}) {
        const char* var = p_only ? "P-only" : "standard";
        auto t0 = Clock::now();
        auto a = analyze(gen_3ec(k4, p_only));
        double tk = secs(t0);
        t0 = Clock::now();
        auto cg = gen_3ec(pet, p_only);
        auto b = analyze(cg);
        double tp = secs(t0);
        o.expect((a.verdict == Verdict::Yes) == k4c, std::string("K4 ") + var);
        o.expect((b.verdict == Verdict::Yes) == petc && b.verdict != Verdict::Unsupported, std::string("Petersen ") + var);
        o.expect(tp < 300, "Petersen too slow");
        o.detail << var << ": K4 " << (a.verdict == Verdict::Yes ? "yes" : "no") << " (" << tk * 1e3 << " ms), Petersen "
                 << (b.verdict == Verdict::Yes ? "yes" : "no") << " (" << cg.g.n() << " vertices, " << tp * 1e3
                 << " ms); ";
    }
    o.detail << "colorer: K4 " << k4c << ", Petersen " << petc;
}

void list_coloring(Outcome& o) {
    int total = 0, yes = 0;
    for (uint64_t seed = 1; total < 60; ++seed) {
        int n = 3 + (int)(seed % 4);
        auto inst = random_listcol(seed, n, 1 + (int)(seed % 3));
        bool want = brute::list_colorable(inst.g, inst.lists);
        for (bool p_only : {false, true}) {
            auto v = analyze(gen_listcol(inst, p_only)).verdict;
            o.expect(v != Verdict::Unsupported && (v == Verdict::Yes) == want,
                     "seed " + std::to_string(seed) + (p_only ? " P-only" : " standard"));
        }
        yes += want;
        ++total;
    }
    auto w = parse_listcol(slurp("data/wheel.inst"));
    bool ww = brute::list_colorable(w.g, w.lists);
    for (bool p_only : {false, true}) o.expect((analyze(gen_listcol(w, p_only)).verdict == Verdict::Yes) == ww, "wheel fixture");
    o.detail << total << " random instances x 2 variants (colorable " << yes << ", not " << total - yes
             << "), wheel fixture " << (ww ? "colorable" : "not colorable");
}

Tree star_of(Kind k, int n) {
    std::vector<int> l(n);
    for (int i = 0; i < n; ++i) l[i] = i;
    return Tree::star(k, l);
}

bool all_consecutive(const std::set<Order>& all, const std::vector<int>& L) {
    for (auto& o : all)
        if (!brute::cyc_consecutive(o, L)) return false;
    return true;
}

std::vector<std::vector<int>> proper_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (int m = 1; m < (1 << n) - 1; ++m) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (m >> i & 1) s.push_back(i);
        out.push_back(s);
    }
    return out;
}

// set partitions of 0..n-1 into >= 2 blocks
void partitions(int n, const std::function<void(const std::vector<std::vector<int>>&)>& f) {
    std::vector<std::vector<int>> blocks;
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            if (blocks.size() >= 2) f(blocks);
            return;
        }
        for (size_t b = 0; b < blocks.size(); ++b) {
            blocks[b].push_back(i);
            rec(i + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({i});
        rec(i + 1);
        blocks.pop_back();
    };
    rec(0);
}

void fpq_suite(Outcome& o) {
    // counting identities
    double fact = 1;
    for (int k = 3; k <= 6; ++k) {
        fact *= k - 1;
        o.expect(count_orders(star_of(Kind::P, k)) == fact && enumerate_orders(star_of(Kind::P, k)).size() == fact, "P count");
        o.expect(count_orders(star_of(Kind::Q, k)) == 2 && enumerate_orders(star_of(Kind::Q, k)).size() == 2, "Q count");
        o.expect(count_orders(star_of(Kind::F, k)) == 1 && enumerate_orders(star_of(Kind::F, k)).size() == 1, "F count");
    }
    std::map<int, std::vector<Tree>> trees;
    std::map<int, std::vector<std::set<Order>>> sets;
    long counted = 0;
    for (int n = 3; n <= 6; ++n)
        brute::all_trees(n, [&](const Tree& t) {
            auto ref = brute::consistent(t);
            auto en = enumerate_orders(t);
            o.expect(brute::as_set(en) == ref && en.size() == ref.size() && count_orders(t) == (double)ref.size(),
                     "order count of " + to_sexpr(t));
            trees[n].push_back(t);
            sets[n].push_back(std::move(ref));
            ++counted;
        });

    // intersection: all pairs up to 5 leaves, each 6-leaf tree against partners
    long pairs = 0;
    auto check_pair = [&](const Tree& a, const std::set<Order>& sa, const Tree& b, const std::set<Order>& sb) {
        std::set<Order> want;
        std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(want, want.begin()));
        auto r = intersect(a, b);
        o.expect(want.empty() ? r.null : !r.null, "intersect emptiness " + to_sexpr(a) + " " + to_sexpr(b));
        o.expect(brute::consistent(r) == want, "intersect " + to_sexpr(a) + " " + to_sexpr(b));
        ++pairs;
    };
    for (int n = 3; n <= 5; ++n)
        for (size_t i = 0; i < trees[n].size(); ++i)
            for (size_t j = i; j < trees[n].size(); ++j) check_pair(trees[n][i], sets[n][i], trees[n][j], sets[n][j]);
    std::mt19937 rng(6);
    auto& t6 = trees[6];
    for (size_t i = 0; i < t6.size(); ++i) {
        size_t j = rng() % t6.size();
        check_pair(t6[i], sets[6][i], t6[j], sets[6][j]);
        // a partner sharing an order
        auto pick = *std::next(sets[6][i].begin(), rng() % sets[6][i].size());
        size_t k = rng() % t6.size();
        for (size_t step = 0; step < t6.size() && !sets[6][k].count(pick); ++step) k = (k + 1) % t6.size();
        check_pair(t6[i], sets[6][i], t6[k], sets[6][k]);
    }

    // boundary dichotomy on every tree and every proper subset
    long subsets = 0, node_cases = 0;
    for (int n = 3; n <= 6; ++n) {
        auto subs = proper_subsets(n);
        for (size_t i = 0; i < trees[n].size(); ++i) {
            auto& t = trees[n][i];
            for (auto& L : subs) {
                bool want = all_consecutive(sets[n][i], L);
                o.expect(is_consecutive(t, L) == want, "is_consecutive " + to_sexpr(t));
                if (!want) continue;
                ++subsets;
                auto b = boundary(t, L);
                if (b.is_edge) {
                    o.expect(t.side(b.x, b.y) == L, "split edge side " + to_sexpr(t));
                    continue;
                }
                ++node_cases;
                int s = (int)b.split_nbrs.size();
                if (b.node < 0 || b.node >= (int)t.nodes.size() || s < 2) {
                    o.expect(false, "no boundary for a consecutive set in " + to_sexpr(t));
                    continue;
                }
                auto k = t.nodes[b.node].kind;
                o.expect((k == Kind::Q || k == Kind::F) && t.degree(b.node) >= s + 2, "boundary node " + to_sexpr(t));
                std::vector<int> u;
                for (int y : b.split_nbrs) {
                    auto sd = t.side(b.node, y);
                    u.insert(u.end(), sd.begin(), sd.end());
                }
                std::sort(u.begin(), u.end());
                o.expect(u == L, "split edges cover L " + to_sexpr(t));
                auto& adj = t.nodes[b.node].adj;
                int d = (int)adj.size();
                int i0 = (int)(std::find(adj.begin(), adj.end(), b.split_nbrs[0]) - adj.begin());
                for (int j = 0; j < s; ++j) o.expect(adj[(i0 + j) % d] == b.split_nbrs[j], "split edges consecutive");
            }
        }
    }

    // extension exists <=> brute force <=> no incompatible pair, every partition into consecutive blocks
    long ext = 0, ext_yes = 0;
    for (int n = 3; n <= 6; ++n) {
        std::vector<std::vector<std::vector<int>>> parts;
        partitions(n, [&](const std::vector<std::vector<int>>& p) { parts.push_back(p); });
        for (size_t i = 0; i < trees[n].size(); ++i) {
            auto& t = trees[n][i];
            auto& all = sets[n][i];
            if (n == 6 && i % 8) continue;  // every 8th six-leaf tree
            for (auto& blocks : parts) {
                bool ok = true;
                for (auto& B : blocks) ok = ok && all_consecutive(all, B);
                if (!ok) continue;
                std::vector<std::vector<Order>> choices;
                std::vector<Boundary> bnd;
                for (auto& B : blocks) {
                    auto rs = brute::restrict_set(all, B, 100);
                    choices.emplace_back(rs.begin(), rs.end());
                    bnd.push_back(boundary(t, B));
                }
                std::vector<size_t> idx(blocks.size(), 0);
                for (;;) {
                    std::vector<std::pair<std::vector<int>, Order>> asg;
                    std::vector<int> orient;
                    for (size_t b = 0; b < blocks.size(); ++b) {
                        asg.push_back({blocks[b], choices[b][idx[b]]});
                        orient.push_back(bnd[b].is_edge ? -1 : (int)orientation_of(t, blocks[b], choices[b][idx[b]], 100));
                    }
                    bool brute_yes = false;
                    for (auto& ord : all) {
                        bool fits = true;
                        for (auto& [B, sg] : asg) fits = fits && brute::restrict_to(ord, B, 100) == sg;
                        if (fits) {
                            brute_yes = true;
                            break;
                        }
                    }
                    bool compatible = true;
                    for (size_t a = 0; a < blocks.size(); ++a)
                        for (size_t b = a + 1; b < blocks.size(); ++b)
                            if (!bnd[a].is_edge && !bnd[b].is_edge && bnd[a].node == bnd[b].node && orient[a] != orient[b])
                                compatible = false;
                    auto got = extension_exists(t, asg, 100);
                    o.expect(got.has_value() == brute_yes, "extension_exists " + to_sexpr(t));
                    o.expect(compatible == brute_yes, "pairwise compatibility " + to_sexpr(t));
                    if (got) o.expect(represents(t, *got), "extension not represented");
                    ++ext;
                    ext_yes += brute_yes;
                    size_t b = 0;
                    while (b < idx.size() && ++idx[b] == choices[b].size()) idx[b++] = 0;
                    if (b == idx.size()) break;
                }
            }
        }
    }
    o.detail << counted << " trees (all shapes and rotations, 3-6 leaves), " << pairs << " intersections, " << subsets
             << " consecutive sets (" << node_cases << " with a node boundary), " << ext << " block assignments ("
             << ext_yes << " extensible)";
}

void embedding_trees(Outcome& o) {
    auto text = slurp("data/small_biconnected.graphs");
    std::vector<std::string> chunks;
    std::string cur, line;
    std::istringstream in(text);
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            if (!cur.empty()) chunks.push_back(cur);
            cur.clear();
            continue;
        }
        cur += line + "\n";
    }
    if (!cur.empty()) chunks.push_back(cur);
    int graphs = 0, vertices = 0;
    std::map<std::string, int> types;
    for (auto& c : chunks) {
        auto g = parse_graph(c);
        if (g.m() > 9 || !is_biconnected(g) || !is_planar_graph(g)) {
            o.expect(false, "fixture outside the class");
            continue;
        }
        std::vector<std::set<Order>> want(g.n());
        for_each_rotation_system(g, [&](const RotationSystem& rho) {
            if (is_planar_rotation(g, rho))
                for (int v = 0; v < g.n(); ++v) {
                    want[v].insert(brute::norm(rho[v]));
                    want[v].insert(brute::norm(brute::reversed(rho[v])));
                }
            return true;
        });
        auto t = decompose(g);
        for (auto& nd : t.nodes) ++types[node_type_name(nd.type)];
        for (int v = 0; v < g.n(); ++v) {
            std::set<Order> got;
            for (auto& ord : enumerate_orders(embedding_tree(t, v))) got.insert(brute::norm(ord));
            o.expect(got == want[v], "vertex " + g.name(v) + " of\n" + c);
            ++vertices;
        }
        ++graphs;
    }
    o.detail << graphs << " graphs, " << vertices << " vertices (SPQR nodes:";
    for (auto& [k, v] : types) o.detail << " " << k << " " << v;
    o.detail << ")";
}

Tree relax(Tree t) {
    for (auto& nd : t.nodes)
        if (nd.alive && nd.kind == Kind::F) nd.kind = Kind::Q;
    return t;
}

void nodetrix(Outcome& o) {
    auto fx = parse_nodetrix(slurp("data/two_matrices.ntx"));
    auto r = test_fixed_sides(fx, true);
    o.expect(r.verdict == Verdict::Yes && r.layout && layout_valid(fx, *r.layout), "fixture");
    o.detail << "fixture " << (r.verdict == Verdict::Yes ? "yes" : "no") << (r.layout ? " with layout" : "") << "; ";

    int inst = 0, yes = 0, gadgets = 0, gadget_planar = 0;
    for (uint32_t seed = 1; (inst < 40 || inst - yes < 10) && seed < 20000; ++seed) {
        auto ntg = brute::random_nodetrix(seed, 2 + seed % 3, 3, 1 + seed % 3, true);
        auto nc = constraint_graph(ntg);
        if (!is_biconnected(nc.cg.g)) continue;
        int want = brute::nodetrix_planar(ntg, false);
        if (want < 0) continue;
        bool cg_yes;
        try {
            cg_yes = oracle_test(nc.cg, kCaps);
        } catch (const CapExceeded&) {
            continue;
        }
        auto res = test_fixed_sides(ntg, true);
        std::string tag = "seed " + std::to_string(seed);
        o.expect((res.verdict == Verdict::Yes) == (want == 1), "tester vs exhaustive search, " + tag);
        o.expect(cg_yes == (want == 1), "constraint graph vs exhaustive search, " + tag);
        if (res.verdict == Verdict::Yes) o.expect(res.layout && layout_valid(ntg, *res.layout), "layout, " + tag);
        // every assignment (at most 64, else a seeded sample)
        double total = 1;
        for (auto& D : nc.cg.D) total *= D.size();
        std::mt19937 rng(seed);
        int n = nc.cg.g.n();
        std::vector<int> a(n, 0);
        for (int k = 0; k < std::min(64.0, total); ++k) {
            if (total > 64)
                for (int v = 0; v < n; ++v) a[v] = (int)(rng() % nc.cg.D[v].size());
            ChoosableGraph fixed = nc.cg, relaxed = nc.cg;
            for (int v = 0; v < n; ++v) {
                fixed.D[v] = {nc.cg.D[v][a[v]]};
                relaxed.D[v] = {relax(nc.cg.D[v][a[v]])};
            }
            bool planar = is_planar_graph(expand_gadget(nc.cg, a));
            bool rel = oracle_test(relaxed, kCaps), ex = oracle_test(fixed, kCaps);
            o.expect(planar == rel, "gadget vs relaxed oracle, " + tag);
            o.expect(!ex || planar, "exact yes but gadget non-planar, " + tag);
            ++gadgets;
            gadget_planar += planar;
            if (total <= 64)
                for (int v = 0; v < n && ++a[v] == (int)nc.cg.D[v].size(); ++v) a[v] = 0;
        }
        ++inst;
        yes += want;
    }
    o.expect(inst >= 30 && inst - yes >= 10, "too few instances");
    o.detail << inst << " instances (yes " << yes << ", no " << inst - yes << "), " << gadgets << " gadget checks ("
             << gadget_planar << " planar); ";

    int free_inst = 0, free_yes = 0;
    for (uint32_t seed = 1; free_inst < 30 && seed < 20000; ++seed) {
        auto ntg = brute::random_nodetrix(seed, 2 + seed % 3, 2, seed % 2, false);
        std::vector<int> per(ntg.clusters.size(), 0);
        for (auto& e : ntg.edges) ++per[e.a.cluster], ++per[e.b.cluster];
        if (*std::max_element(per.begin(), per.end()) > 2) continue;
        if (!is_biconnected(constraint_graph(ntg, true).cg.g)) continue;
        int ends = 2 * (int)ntg.edges.size();
        bool any = false;
        for (long sc = 0; sc < (1L << (2 * ends)) && !any; ++sc) {
            auto f = ntg;
            for (int j = 0; j < ends; ++j) (j % 2 ? f.edges[j / 2].b : f.edges[j / 2].a).side = (Side)((sc >> (2 * j)) & 3);
            any = test_fixed_sides(f).verdict == Verdict::Yes;
        }
        auto fr = test_free_sides(ntg, true);
        o.expect((fr.verdict == Verdict::Yes) == any, "free vs OR of fixed, seed " + std::to_string(seed));
        o.expect(brute::nodetrix_planar(ntg, true) == (any ? 1 : 0), "free vs exhaustive search, seed " + std::to_string(seed));
        if (fr.layout) o.expect(layout_valid(ntg, *fr.layout, true), "free layout");
        ++free_inst;
        free_yes += any;
    }
    o.expect(free_inst >= 30, "too few free-side instances");
    o.detail << free_inst << " free-side instances (yes " << free_yes << ")";
}

void scaling(Outcome& o) {
    std::vector<int> ns{20, 40, 80};
    std::vector<double> times;
    for (int n : ns) {
        RandomParams p;
        p.n = n;
        p.d_max = 2;
        p.exact_d = true;
        p.tree_size = 3;
        p.p_planar = 1;
        std::vector<ChoosableGraph> fam;
        for (uint64_t s = 0; s < 20; ++s) fam.push_back(gen_series_parallel(s, p));
        double best = 1e9;
        for (int rep = 0; rep < 3; ++rep) {
            auto t0 = Clock::now();
            for (auto& cg : fam) o.expect(analyze(cg).verdict == Verdict::Yes, "series-parallel instance not yes");
            best = std::min(best, secs(t0));
        }
        times.push_back(best);
    }
    double e1 = std::log(times[1] / times[0]) / std::log(2.0), e2 = std::log(times[2] / times[1]) / std::log(2.0);
    double e = std::log(times[2] / times[0]) / std::log(4.0);
    o.expect(e < 3 && e2 < 3, "growth not subcubic");
    o.detail << "20 instances per n, D_max 2: ";
    for (size_t i = 0; i < ns.size(); ++i) o.detail << "n=" << ns[i] << " " << times[i] * 1e3 << " ms, ";
    o.detail << "exponents " << e1 << " / " << e2 << " (overall " << e << ")";
}

}  // namespace

int main() {
    struct Crit {
        int id;
        const char* name;
        void (*run)(Outcome&);
    };
    std::vector<Crit> crits{{1, "dp equals oracle on random instances", master_equivalence},
                            {2, "psi equals oracle per SPQR node", node_equivalence},
                            {3, "tree choice fixture", choice_fixture},
                            {4, "edge 3-coloring reduction", three_edge_coloring},
                            {5, "list coloring reduction", list_coloring},
                            {6, "FPQ-tree suite", fpq_suite},
                            {7, "embedding tree completeness", embedding_trees},
                            {8, "NodeTrix", nodetrix},
                            {9, "series-parallel scaling", scaling}};
    int failed = 0;
    for (auto& c : crits) {
        Outcome o;
        auto t0 = Clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << c.id << " [" << c.name << "]: " << (o.pass ? "PASS" : "FAIL") << " - "
                  << o.detail.str() << " [" << secs(t0) << " s]\n";
        for (auto& f : o.failures) std::cout << "    " << f << "\n";
        std::cout.flush();
        failed += !o.pass;
    }
    return failed ? 1 : 0;
}
