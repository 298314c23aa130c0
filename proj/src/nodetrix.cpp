#include "fpq/nodetrix.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "fpq/spqr.hpp"

namespace fpq {

const char* side_name(Side s) {
    switch (s) {
        case Side::Top: return "T";
        case Side::Right: return "R";
        case Side::Bottom: return "B";
        case Side::Left: return "L";
        default: return "?";
    }
}

namespace {

Side parse_side(int ln, const std::string& s) {
    if (s == "T") return Side::Top;
    if (s == "R") return Side::Right;
    if (s == "B") return Side::Bottom;
    if (s == "L") return Side::Left;
    if (s == "?") return Side::Free;
    throw ParseError(ln, "bad side '" + s + "'");
}

int factorial(int k) { return k <= 1 ? 1 : k * factorial(k - 1); }

}  // namespace

bool NodeTrixGraph::sides_fixed() const {
    for (auto& e : edges)
        if (e.a.side == Side::Free || e.b.side == Side::Free) return false;
    return true;
}

void NodeTrixGraph::check() const {
    std::set<std::string> seen;
    for (auto& c : clusters)
        for (auto& v : c)
            if (!seen.insert(v).second) throw std::invalid_argument("vertex " + v + " in two clusters");
    std::set<std::string> ids;
    for (auto& e : edges) {
        if (!ids.insert(e.id).second) throw std::invalid_argument("duplicate edge id " + e.id);
        if (e.a.cluster == e.b.cluster) throw std::invalid_argument("edge " + e.id + " stays inside a cluster");
    }
}

NodeTrixGraph parse_nodetrix(const std::string& text) {
    NodeTrixGraph ntg;
    std::map<std::string, int> cidx;
    std::istringstream is(text);
    std::string line;
    int ln = 0;
    auto end_of = [&](const std::string& tok) {
        auto a = tok.find('.'), b = tok.rfind('.');
        if (a == std::string::npos || a == b) throw ParseError(ln, "expected <cluster>.<vertex>.<side>, got '" + tok + "'");
        std::string c = tok.substr(0, a), v = tok.substr(a + 1, b - a - 1);
        auto it = cidx.find(c);
        if (it == cidx.end()) throw ParseError(ln, "unknown cluster '" + c + "'");
        auto& vs = ntg.clusters[it->second];
        auto vt = std::find(vs.begin(), vs.end(), v);
        if (vt == vs.end()) throw ParseError(ln, "vertex '" + v + "' not in cluster '" + c + "'");
        return NtEnd{it->second, (int)(vt - vs.begin()), parse_side(ln, tok.substr(b + 1))};
    };
    while (std::getline(is, line)) {
        ++ln;
        auto h = line.find('#');
        auto tok = split_ws(h == std::string::npos ? line : line.substr(0, h));
        if (tok.empty()) continue;
        if (tok[0] == "c") {
            if (tok.size() < 3) throw ParseError(ln, "cluster needs an id and vertices");
            if (cidx.count(tok[1])) throw ParseError(ln, "duplicate cluster '" + tok[1] + "'");
            cidx[tok[1]] = (int)ntg.clusters.size();
            ntg.cluster_ids.push_back(tok[1]);
            ntg.clusters.emplace_back(tok.begin() + 2, tok.end());
            ntg.intra.emplace_back();
        } else if (tok[0] == "ie") {
            if (tok.size() != 4) throw ParseError(ln, "ie needs <id> <end> <end>");
            ntg.edges.push_back({tok[1], end_of(tok[2]), end_of(tok[3])});
        } else if (tok[0] == "ia") {
            if (tok.size() != 4) throw ParseError(ln, "ia needs <cluster> <u> <v>");
            auto it = cidx.find(tok[1]);
            if (it == cidx.end()) throw ParseError(ln, "unknown cluster '" + tok[1] + "'");
            auto& vs = ntg.clusters[it->second];
            auto u = std::find(vs.begin(), vs.end(), tok[2]), v = std::find(vs.begin(), vs.end(), tok[3]);
            if (u == vs.end() || v == vs.end()) throw ParseError(ln, "intra edge outside its cluster");
            ntg.intra[it->second].push_back({(int)(u - vs.begin()), (int)(v - vs.begin())});
        } else {
            throw ParseError(ln, "unknown record '" + tok[0] + "'");
        }
    }
    try {
        ntg.check();
    } catch (const std::invalid_argument& e) {
        throw ParseError(ln, e.what());
    }
    return ntg;
}

std::string format_nodetrix(const NodeTrixGraph& ntg) {
    std::ostringstream os;
    for (size_t c = 0; c < ntg.clusters.size(); ++c) {
        os << "c " << ntg.cluster_ids[c];
        for (auto& v : ntg.clusters[c]) os << " " << v;
        os << "\n";
        for (auto [u, v] : ntg.intra[c])
            os << "ia " << ntg.cluster_ids[c] << " " << ntg.clusters[c][u] << " " << ntg.clusters[c][v] << "\n";
    }
    auto end = [&](const NtEnd& x) {
        return ntg.cluster_ids[x.cluster] + "." + ntg.clusters[x.cluster][x.vertex] + "." + side_name(x.side);
    };
    for (auto& e : ntg.edges) os << "ie " << e.id << " " << end(e.a) << " " << end(e.b) << "\n";
    return os.str();
}

Tree matrix_fpq_tree(int k, const std::vector<Attachment>& att, const std::vector<int>& pi) {
    std::vector<std::pair<int, Side>> pos;
    for (Side s : {Side::Top, Side::Right})
        for (int i = 0; i < k; ++i) pos.push_back({pi[i], s});
    for (Side s : {Side::Bottom, Side::Left})
        for (int i = k - 1; i >= 0; --i) pos.push_back({pi[i], s});
    std::vector<std::vector<int>> groups;
    std::vector<int> all;
    for (auto [v, s] : pos) {
        std::vector<int> g;
        for (auto& a : att) {
            if (a.side == Side::Free) throw std::invalid_argument("matrix tree needs fixed sides");
            if (a.vertex < 0 || a.vertex >= k) throw std::invalid_argument("attachment outside the matrix");
            if (a.vertex == v && a.side == s) g.push_back(a.label);
        }
        if (!g.empty()) groups.push_back(g), all.insert(all.end(), g.begin(), g.end());
    }
    if (all.size() != att.size()) throw std::invalid_argument("attachment not placed");
    if (all.size() <= 2 || groups.size() == 1) return Tree::star(Kind::P, all);
    Tree t;
    int root = t.add_node(Kind::F);
    for (auto& g : groups) {
        if (g.size() == 1) {
            t.link(root, t.add_node(Kind::Leaf, g[0]));
            continue;
        }
        int p = t.add_node(Kind::P);
        t.link(root, p);
        for (int l : g) t.link(p, t.add_node(Kind::Leaf, l));
    }
    normalize(t);
    return t;
}

NtConstraint constraint_graph(const NodeTrixGraph& ntg, bool free_sides, const NtCaps& caps) {
    ntg.check();
    if (!free_sides && !ntg.sides_fixed()) throw std::invalid_argument("missing side annotation");
    NtConstraint nc;
    int C = (int)ntg.clusters.size();
    for (int c = 0; c < C; ++c) nc.cg.g.add_vertex(ntg.cluster_ids[c]);
    nc.ends.resize(C);
    for (int i = 0; i < (int)ntg.edges.size(); ++i) {
        auto& e = ntg.edges[i];
        nc.cg.g.add_edge(e.id, e.a.cluster, e.b.cluster);
        nc.ends[e.a.cluster].push_back({i, 0});
        nc.ends[e.b.cluster].push_back({i, 1});
    }
    nc.cg.D.resize(C);
    nc.choice.resize(C);
    for (int c = 0; c < C; ++c) {
        int k = (int)ntg.clusters[c].size();
        auto& ends = nc.ends[c];
        int ne = (int)ends.size();
        double count = factorial(k) * (free_sides ? std::pow(4.0, ne) : 1.0);
        if (count > caps.max_trees)
            throw NtCapExceeded("cluster " + ntg.cluster_ids[c] + " would need " + std::to_string((long long)count) + " trees");
        std::set<std::string> seen;
        std::vector<int> pi(k);
        std::iota(pi.begin(), pi.end(), 0);
        long long side_combos = free_sides ? 1LL << (2 * ne) : 1;
        do {
            for (long long sc = 0; sc < side_combos; ++sc) {
                MatrixChoice ch{pi, {}};
                std::vector<Attachment> att;
                for (int j = 0; j < ne; ++j) {
                    auto& ie = ntg.edges[ends[j].first];
                    const NtEnd& x = ends[j].second ? ie.b : ie.a;
                    Side s = free_sides ? (Side)((sc >> (2 * j)) & 3) : x.side;
                    ch.sides.push_back(s);
                    att.push_back({ends[j].first, x.vertex, s});
                }
                Tree t = matrix_fpq_tree(k, att, pi);
                if (!seen.insert(canonical_string(t)).second) continue;
                nc.cg.D[c].push_back(std::move(t));
                nc.choice[c].push_back(std::move(ch));
            }
        } while (std::next_permutation(pi.begin(), pi.end()));
    }
    return nc;
}

namespace {

NtResult run(const NodeTrixGraph& ntg, const NtConstraint& nc, bool free_sides, bool want_layout) {
    NtResult r;
    r.d_max = nc.cg.d_max();
    auto an = analyze(nc.cg, {}, want_layout);
    r.verdict = an.verdict;
    r.reason = an.reason;
    if (an.verdict == Verdict::Unsupported) r.reason = "constraint graph: " + an.reason;
    if (an.witness) {
        r.layout = layout_from_witness(ntg, nc, *an.witness);
        if (!layout_valid(ntg, *r.layout, free_sides)) throw std::logic_error("layout failed validation");
    }
    return r;
}

}  // namespace

NtResult test_fixed_sides(const NodeTrixGraph& ntg, bool want_layout) {
    return run(ntg, constraint_graph(ntg, false), false, want_layout);
}

NtResult test_free_sides(const NodeTrixGraph& ntg, bool want_layout, const NtCaps& caps) {
    return run(ntg, constraint_graph(ntg, true, caps), true, want_layout);
}

MatrixLayout layout_from_witness(const NodeTrixGraph& ntg, const NtConstraint& nc, const Witness& w) {
    MatrixLayout lay;
    int C = (int)ntg.clusters.size();
    lay.perm.resize(C);
    lay.attach.resize(C);
    for (int c = 0; c < C; ++c) {
        auto& ch = nc.choice[c][w.assignment[c]];
        lay.perm[c] = ch.pi;
        int k = (int)ntg.clusters[c].size();
        lay.attach[c].assign(k, {});
        auto& ends = nc.ends[c];
        // (vertex, side) of every incident edge
        std::map<int, std::pair<int, int>> where;
        for (size_t j = 0; j < ends.size(); ++j) {
            auto& ie = ntg.edges[ends[j].first];
            const NtEnd& x = ends[j].second ? ie.b : ie.a;
            where[ends[j].first] = {x.vertex, (int)ch.sides[j]};
        }
        const Order& rot = w.rotation[c];
        int d = (int)rot.size();
        for (auto& [e, vs] : where) {
            // rotation is clockwise, so a group starts where its predecessor leaves it
            auto same = [&](int f) { return where.at(f) == vs; };
            int start = 0;
            for (int i = 0; i < d; ++i)
                if (same(rot[i]) && !same(rot[(i + d - 1) % d])) start = i;
            auto& out = lay.attach[c][vs.first][vs.second];
            if (!out.empty()) continue;
            for (int i = 0; i < d; ++i) {
                int f = rot[(start + i) % d];
                if (same(f)) out.push_back(ntg.edges[f].id);
            }
        }
    }
    return lay;
}

bool layout_valid(const NodeTrixGraph& ntg, const MatrixLayout& lay, bool free_sides) {
    int C = (int)ntg.clusters.size();
    if ((int)lay.perm.size() != C || (int)lay.attach.size() != C) return false;
    MultiGraph g;
    for (int c = 0; c < C; ++c) g.add_vertex(ntg.cluster_ids[c]);
    for (auto& e : ntg.edges) g.add_edge(e.id, e.a.cluster, e.b.cluster);
    RotationSystem rho(C);
    for (int c = 0; c < C; ++c) {
        int k = (int)ntg.clusters[c].size();
        auto p = lay.perm[c];
        std::sort(p.begin(), p.end());
        for (int i = 0; i < k; ++i)
            if (p[i] != i) return false;
        if ((int)lay.attach[c].size() != k) return false;
        auto& pi = lay.perm[c];
        std::vector<std::pair<int, Side>> pos;
        for (Side s : {Side::Top, Side::Right})
            for (int i = 0; i < k; ++i) pos.push_back({pi[i], s});
        for (Side s : {Side::Bottom, Side::Left})
            for (int i = k - 1; i >= 0; --i) pos.push_back({pi[i], s});
        for (auto [v, s] : pos)
            for (auto& id : lay.attach[c][v][(int)s]) {
                int e = g.edge_index(id);
                if (e < 0) return false;
                auto& ie = ntg.edges[e];
                bool at_a = ie.a.cluster == c && ie.a.vertex == v && (free_sides || ie.a.side == s);
                bool at_b = ie.b.cluster == c && ie.b.vertex == v && (free_sides || ie.b.side == s);
                if (!at_a && !at_b) return false;
                rho[c].push_back(e);
            }
        auto a = rho[c], b = g.incident(c);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    return is_connected(g) && is_planar_rotation(g, rho);
}

MultiGraph expand_gadget(const ChoosableGraph& cg, const std::vector<int>& assignment) {
    const MultiGraph& g = cg.g;
    if ((int)assignment.size() != g.n()) throw std::invalid_argument("assignment size");
    MultiGraph h;
    int cnt = 0;
    auto fresh_edge = [&](int a, int b) { h.add_edge("s" + std::to_string(cnt++), a, b); };
    std::vector<std::map<int, int>> leaf_end(g.n());  // edge -> gadget vertex
    for (int u = 0; u < g.n(); ++u) {
        int a = assignment[u];
        if (a < 0 || a >= (int)cg.D[u].size()) throw std::invalid_argument("assignment out of range");
        const Tree& T = cg.D[u][a];
        std::string base = g.name(u) + ":";
        std::map<std::pair<int, int>, int> at;  // (node, neighbor) -> gadget vertex
        for (int x : T.internal_nodes()) {
            auto& nd = T.nodes[x];
            if (nd.kind == Kind::P || nd.adj.size() < 3) {
                int v = h.add_vertex(base + "p" + std::to_string(x));
                for (int y : nd.adj) at[{x, y}] = v;
            } else {
                int hub = h.add_vertex(base + "h" + std::to_string(x));
                std::vector<int> rim;
                for (size_t i = 0; i < nd.adj.size(); ++i) {
                    rim.push_back(h.add_vertex(base + "r" + std::to_string(x) + "_" + std::to_string(i)));
                    at[{x, nd.adj[i]}] = rim.back();
                    fresh_edge(hub, rim.back());
                }
                for (size_t i = 0; i < rim.size(); ++i) fresh_edge(rim[i], rim[(i + 1) % rim.size()]);
            }
        }
        for (int x : T.internal_nodes())
            for (int y : T.nodes[x].adj) {
                if (T.is_leaf(y)) leaf_end[u][T.nodes[y].label] = at.at({x, y});
                else if (x < y) fresh_edge(at.at({x, y}), at.at({y, x}));
            }
    }
    for (int e = 0; e < g.m(); ++e) fresh_edge(leaf_end[g.edge(e).u].at(e), leaf_end[g.edge(e).v].at(e));
    return h;
}

}  // namespace fpq
