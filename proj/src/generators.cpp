#include "fpq/generators.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "fpq/spqr.hpp"

namespace fpq {

namespace {

std::vector<std::vector<int>> split_runs(std::mt19937& rng, const std::vector<int>& run, int max_kids) {
    int n = (int)run.size();
    int k = std::uniform_int_distribution<int>(2, std::max(2, std::min(n, max_kids)))(rng);
    std::vector<int> cut(n - 1);
    for (int i = 0; i < n - 1; ++i) cut[i] = i + 1;
    std::shuffle(cut.begin(), cut.end(), rng);
    cut.resize(k - 1);
    std::sort(cut.begin(), cut.end());
    std::vector<std::vector<int>> out;
    int prev = 0;
    for (int c : cut) out.emplace_back(run.begin() + prev, run.begin() + c), prev = c;
    out.emplace_back(run.begin() + prev, run.end());
    return out;
}

}  // namespace

Tree random_tree_over(std::mt19937& rng, const Order& order, const RandomTreeParams& prm) {
    if (order.size() <= 2) return Tree::star(Kind::P, order);
    Tree t;
    std::discrete_distribution<int> kd({prm.p_kind[0], prm.p_kind[1], prm.p_kind[2]});
    auto pick = [&] { int k = kd(rng); return k == 0 ? Kind::P : k == 1 ? Kind::Q : Kind::F; };
    std::function<int(const std::vector<int>&)> build = [&](const std::vector<int>& run) {
        if (run.size() == 1) return t.add_node(Kind::Leaf, run[0]);
        int x = t.add_node(pick());
        for (auto& part : split_runs(rng, run, prm.max_kids)) t.link(x, build(part));
        return x;
    };
    // the root sees a cyclic sequence; with two parts it is spliced away
    int r = build(order);
    t.root_hint = r;
    normalize(t);
    return t;
}

}  // namespace fpq

namespace fpq {

namespace {
void fill_trees(ChoosableGraph& cg, std::mt19937& rng, const RandomParams& prm);
}

ChoosableGraph gen_random(uint64_t seed, const RandomParams& prm) {
    if (prm.n < 2 || prm.m < std::max(2, prm.n) || prm.d_max < 1 || prm.tree_size < 2)
        throw std::invalid_argument("gen_random: infeasible parameters");
    std::mt19937 rng((uint32_t)(seed * 2654435761u + 12345));
    ChoosableGraph cg;
    MultiGraph& g = cg.g;
    int n = prm.n;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v));
    int k = 0;
    auto add = [&](int a, int b) { return g.add_edge("e" + std::to_string(k++), a, b); };
    if (n == 2) add(0, 1);
    else
        for (int i = 0; i < n; ++i) add(perm[i], perm[(i + 1) % n]);
    int tries = 0;
    while (g.m() < prm.m) {
        if (++tries > 100000) throw std::invalid_argument("gen_random: could not place edges");
        int a = (int)(rng() % n), b = (int)(rng() % n);
        if (a == b) continue;
        MultiGraph h = g;
        h.add_edge("tmp", a, b);
        if (!is_planar_graph(h)) continue;
        add(a, b);
    }
    fill_trees(cg, rng, prm);
    return cg;
}

ChoosableGraph gen_series_parallel(uint64_t seed, const RandomParams& prm) {
    if (prm.n < 2 || prm.d_max < 1 || prm.tree_size < 2) throw std::invalid_argument("gen_series_parallel: infeasible parameters");
    std::mt19937 rng((uint32_t)(seed * 2246822519u + 777));
    ChoosableGraph cg;
    MultiGraph& g = cg.g;
    // edge list grown by subdividing or doubling random edges
    std::vector<std::pair<int, int>> el{{0, 1}, {0, 1}};
    int n = 2;
    std::bernoulli_distribution series(0.7);
    while (n < prm.n) {
        size_t i = rng() % el.size();
        if (series(rng)) {
            auto [a, b] = el[i];
            el[i] = {a, n};
            el.push_back({n, b});
            ++n;
        } else {
            el.push_back(el[i]);
        }
    }
    for (int v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v));
    for (size_t i = 0; i < el.size(); ++i) g.add_edge("e" + std::to_string(i), el[i].first, el[i].second);
    fill_trees(cg, rng, prm);
    return cg;
}

namespace {

void fill_trees(ChoosableGraph& cg, std::mt19937& rng, const RandomParams& prm) {
    const MultiGraph& g = cg.g;
    int n = g.n();
    auto rho = planar_embedding(g);
    RandomTreeParams tp;
    tp.max_kids = prm.tree_size;
    cg.D.resize(n);
    bool flip = rng() % 2;
    for (int v = 0; v < n; ++v) {
        int cnt = 1 + (int)(rng() % prm.d_max);
        if (prm.exact_d) cnt = prm.d_max;
        bool keep = std::uniform_real_distribution<double>(0, 1)(rng) < prm.p_planar;
        int at = (int)(rng() % cnt);
        for (int i = 0; i < cnt; ++i) {
            Order o = (*rho)[v];
            if (keep && i == at) {
                if (flip) std::reverse(o.begin(), o.end());
            } else {
                std::shuffle(o.begin(), o.end(), rng);
            }
            cg.D[v].push_back(random_tree_over(rng, o, tp));
        }
    }
}

}  // namespace

}  // namespace fpq

namespace fpq {

namespace {

// graph records go to parse_graph; other record kinds are handed back with line numbers
struct Split {
    MultiGraph g;
    std::vector<std::pair<int, std::vector<std::string>>> extra;
};

Split split_records(const std::string& text, const std::string& kinds) {
    std::ostringstream gp;
    Split s;
    std::istringstream is(text);
    std::string line;
    int ln = 0;
    while (std::getline(is, line)) {
        ++ln;
        auto h = line.find('#');
        std::string body = h == std::string::npos ? line : line.substr(0, h);
        auto tok = split_ws(body);
        if (!tok.empty() && tok[0].size() == 1 && kinds.find(tok[0][0]) != std::string::npos) {
            s.extra.push_back({ln, tok});
            gp << "\n";
        } else {
            gp << body << "\n";
        }
    }
    s.g = parse_graph(gp.str());
    return s;
}

int edge_of(const MultiGraph& g, int ln, const std::string& id) {
    int e = g.edge_index(id);
    if (e < 0) throw ParseError(ln, "unknown edge '" + id + "'");
    return e;
}

int int_of(int ln, const std::string& s) {
    try {
        size_t used = 0;
        int x = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return x;
    } catch (const std::exception&) {
        throw ParseError(ln, "expected an integer, got '" + s + "'");
    }
}

void read_rotation(const MultiGraph& g, RotationSystem& rot, int ln, const std::vector<std::string>& tok) {
    if (tok.size() < 2) throw ParseError(ln, "r needs a vertex");
    int v = g.vertex_index(tok[1]);
    if (v < 0) throw ParseError(ln, "unknown vertex '" + tok[1] + "'");
    if (rot.empty()) rot.resize(g.n());
    if (!rot[v].empty()) throw ParseError(ln, "second rotation for " + tok[1]);
    for (size_t i = 2; i < tok.size(); ++i) rot[v].push_back(edge_of(g, ln, tok[i]));
    auto a = rot[v], b = g.incident(v);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw ParseError(ln, "rotation of " + tok[1] + " does not list its edges");
}

void finish_rotation(const MultiGraph& g, const RotationSystem& rot) {
    if (rot.empty()) return;
    for (int v = 0; v < g.n(); ++v)
        if (rot[v].empty() && g.degree(v) > 0) throw std::invalid_argument("no rotation for " + g.name(v));
}

std::string format_rotation(const MultiGraph& g, const RotationSystem& rot) {
    std::ostringstream os;
    for (int v = 0; v < (int)rot.size(); ++v) {
        os << "r " << g.name(v);
        for (int e : rot[v]) os << " " << g.edge(e).id;
        os << "\n";
    }
    return os.str();
}

std::string join(const std::vector<std::string>& xs) {
    std::string s;
    for (auto& x : xs) s += (s.empty() ? "" : " ") + x;
    return s;
}

}  // namespace

DrawnCubicGraph parse_drawing(const std::string& text) {
    auto sp = split_records(text, "rx");
    DrawnCubicGraph d;
    d.g = std::move(sp.g);
    for (auto& [ln, tok] : sp.extra) {
        if (tok[0] == "r") {
            read_rotation(d.g, d.rot, ln, tok);
        } else {
            if (tok.size() != 5) throw ParseError(ln, "x needs <e1> <e2> <pos1> <pos2>");
            d.crossings.push_back({edge_of(d.g, ln, tok[1]), edge_of(d.g, ln, tok[2]), int_of(ln, tok[3]), int_of(ln, tok[4])});
        }
    }
    finish_rotation(d.g, d.rot);
    return d;
}

std::string format_drawing(const DrawnCubicGraph& d) {
    std::string s = format_graph(d.g) + format_rotation(d.g, d.rot);
    for (auto& c : d.crossings)
        s += "x " + d.g.edge(c.e1).id + " " + d.g.edge(c.e2).id + " " + std::to_string(c.pos1) + " " +
             std::to_string(c.pos2) + "\n";
    return s;
}

ChoosableGraph gen_3ec(const DrawnCubicGraph& d, bool p_only) {
    const MultiGraph& g = d.g;
    const int n = g.n(), m = g.m(), C = (int)d.crossings.size();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 3) throw std::invalid_argument("gen_3ec: graph not cubic at " + g.name(v));
    // crossings along every edge, by position
    std::vector<std::vector<int>> along(m);
    for (int c = 0; c < C; ++c) {
        auto& x = d.crossings[c];
        if (x.e1 == x.e2) throw std::invalid_argument("gen_3ec: edge crosses itself");
        along[x.e1].push_back(c);
        along[x.e2].push_back(c);
    }
    auto pos_on = [&](int c, int e) { return d.crossings[c].e1 == e ? d.crossings[c].pos1 : d.crossings[c].pos2; };
    for (int e = 0; e < m; ++e) {
        std::sort(along[e].begin(), along[e].end(), [&](int a, int b) { return pos_on(a, e) < pos_on(b, e); });
        for (int i = 0; i < (int)along[e].size(); ++i)
            if (pos_on(along[e][i], e) != i)
                throw std::invalid_argument("gen_3ec: crossing positions on " + g.edge(e).id + " are not 0..k-1");
    }

    // handedness of every crossing: pick the one that makes the planarization planar
    std::vector<int> hand(C, 0);
    if (C > 0) {
        if (d.rot.empty()) throw std::invalid_argument("gen_3ec: crossings need a rotation system");
        if (C > 20) throw std::invalid_argument("gen_3ec: too many crossings");
        MultiGraph p;
        for (int v = 0; v < n; ++v) p.add_vertex(g.name(v));
        for (int c = 0; c < C; ++c) p.add_vertex("c" + std::to_string(c));
        std::vector<std::vector<int>> seg(m);
        for (int e = 0; e < m; ++e) {
            int prev = g.edge(e).u;
            for (size_t i = 0; i <= along[e].size(); ++i) {
                int next = i < along[e].size() ? n + along[e][i] : g.edge(e).v;
                seg[e].push_back(p.add_edge(g.edge(e).id + "/" + std::to_string(i), prev, next));
                prev = next;
            }
        }
        RotationSystem rho(n + C);
        for (int v = 0; v < n; ++v)
            for (int e : d.rot[v]) rho[v].push_back(g.edge(e).u == v ? seg[e].front() : seg[e].back());
        bool found = false;
        for (uint32_t mask = 0; mask < (1u << C) && !found; ++mask) {
            for (int c = 0; c < C; ++c) {
                auto& x = d.crossings[c];
                int ein = seg[x.e1][x.pos1], eout = seg[x.e1][x.pos1 + 1];
                int fin = seg[x.e2][x.pos2], fout = seg[x.e2][x.pos2 + 1];
                rho[n + c] = mask >> c & 1 ? Order{ein, fout, eout, fin} : Order{ein, fin, eout, fout};
            }
            if (is_planar_rotation(p, rho)) {
                found = true;
                for (int c = 0; c < C; ++c) hand[c] = mask >> c & 1;
            }
        }
        if (!found) throw std::invalid_argument("gen_3ec: crossings inconsistent with the rotation");
    }

    const int k = p_only ? 6 : 3;
    std::ostringstream out;
    for (int v = 0; v < n; ++v) out << "v " << g.name(v) << "\n";
    auto grid = [&](int c, int i, int j) {
        return "x" + std::to_string(c) + "_" + std::to_string(i) + "_" + std::to_string(j);
    };
    for (int c = 0; c < C; ++c)
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= k; ++j) out << "v " << grid(c, i, j) << "\n";
    // strand s of e: endpoint strand edge ids
    std::vector<std::vector<std::string>> first(m, std::vector<std::string>(k + 1)), last = first;
    std::map<std::string, std::vector<std::string>> dummy_edges;
    for (int e = 0; e < m; ++e) {
        const std::string& id = g.edge(e).id;
        for (int s = 1; s <= k; ++s) {
            std::vector<std::string> path{g.name(g.edge(e).u)};
            for (int c : along[e]) {
                bool row = d.crossings[c].e1 == e;
                // rows of e1 cross the strands of e2; hand 0: (e_in, f_in, e_out, f_out) clockwise
                for (int t = 1; t <= k; ++t) {
                    int other = row ? (hand[c] ? t : k + 1 - t) : (hand[c] ? k + 1 - t : t);
                    path.push_back(row ? grid(c, s, other) : grid(c, other, s));
                }
            }
            path.push_back(g.name(g.edge(e).v));
            for (size_t q = 0; q + 1 < path.size(); ++q) {
                std::string eid = id + "_" + std::to_string(s);
                if (path.size() > 2) eid += "_" + std::to_string(q);
                out << "e " << eid << " " << path[q] << " " << path[q + 1] << "\n";
                if (q == 0) first[e][s] = eid;
                if (q + 2 == path.size()) last[e][s] = eid;
                if (q > 0) dummy_edges[path[q]].push_back(eid);
                if (q + 2 < path.size()) dummy_edges[path[q + 1]].push_back(eid);
            }
        }
    }
    // leaf orders per color: red, green, blue
    static const int cfg3[3][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}};
    static const int cfg6[3][6] = {{1, 2, 3, 4, 5, 6}, {1, 6, 3, 2, 5, 4}, {1, 4, 3, 6, 5, 2}};
    for (int v = 0; v < n; ++v) {
        std::vector<int> inc = g.incident(v);
        std::sort(inc.begin(), inc.end());
        int col[3] = {0, 1, 2};
        do {
            std::vector<std::string> kids;
            for (int i = 0; i < 3; ++i) {
                int e = inc[i];
                auto& ends = g.edge(e).u == v ? first[e] : last[e];
                if (!p_only) {
                    auto* c = cfg3[col[i]];
                    kids.push_back("(Q " + ends[c[0]] + " " + ends[c[1]] + " " + ends[c[2]] + ")");
                } else {
                    auto* c = cfg6[col[i]];
                    std::vector<std::string> pairs;
                    for (int q = 0; q < 3; ++q) pairs.push_back("(P " + ends[c[2 * q]] + " " + ends[c[2 * q + 1]] + ")");
                    kids.push_back("(P " + join(pairs) + ")");
                }
            }
            out << "d " << g.name(v) << " (P " << join(kids) << ")\n";
        } while (std::next_permutation(col, col + 3));
    }
    for (auto& [x, es] : dummy_edges) out << "d " << x << " (P " << join(es) << ")\n";
    return parse_choosable(out.str());
}

ListColoringInstance parse_listcol(const std::string& text) {
    auto sp = split_records(text, "lr");
    ListColoringInstance inst;
    inst.g = std::move(sp.g);
    inst.lists.resize(inst.g.n());
    std::vector<char> seen(inst.g.n(), 0);
    for (auto& [ln, tok] : sp.extra) {
        if (tok[0] == "r") {
            read_rotation(inst.g, inst.rot, ln, tok);
            continue;
        }
        if (tok.size() < 2) throw ParseError(ln, "l needs a vertex");
        int v = inst.g.vertex_index(tok[1]);
        if (v < 0) throw ParseError(ln, "unknown vertex '" + tok[1] + "'");
        if (seen[v]++) throw ParseError(ln, "second list for " + tok[1]);
        for (size_t i = 2; i < tok.size(); ++i) inst.lists[v].push_back(int_of(ln, tok[i]));
        auto s = inst.lists[v];
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw ParseError(ln, "repeated color");
    }
    finish_rotation(inst.g, inst.rot);
    return inst;
}

std::string format_listcol(const ListColoringInstance& inst) {
    std::ostringstream os;
    os << format_graph(inst.g) << format_rotation(inst.g, inst.rot);
    for (int v = 0; v < inst.g.n(); ++v) {
        os << "l " << inst.g.name(v);
        for (int c : inst.lists[v]) os << " " << c;
        os << "\n";
    }
    return os.str();
}

ChoosableGraph gen_listcol(const ListColoringInstance& inst, bool p_only) {
    const MultiGraph& g = inst.g;
    if (!inst.rot.empty()) {
        if (!is_planar_rotation(g, inst.rot)) throw std::invalid_argument("gen_listcol: rotation system is not planar");
    } else if (!is_planar_graph(g)) {
        throw std::invalid_argument("gen_listcol: graph is not planar");
    }
    const int k = p_only ? 6 : 3;
    struct Bundle {
        int color;  // -1: no color
        std::vector<std::string> ids;
    };
    std::vector<std::vector<Bundle>> bundles(g.m());
    std::ostringstream out;
    for (int v = 0; v < g.n(); ++v) out << "v " << g.name(v) << "\n";
    for (int e = 0; e < g.m(); ++e) {
        auto a = inst.lists[g.edge(e).u], b = inst.lists[g.edge(e).v];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        std::vector<int> shared;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
        if (shared.empty()) shared.push_back(-1);
        for (int c : shared) {
            Bundle bd{c, {}};
            for (int s = 1; s <= k; ++s) {
                std::string id = g.edge(e).id + (c < 0 ? "" : "_c" + std::to_string(c)) + "_" + std::to_string(s);
                out << "e " << id << " " << g.name(g.edge(e).u) << " " << g.name(g.edge(e).v) << "\n";
                bd.ids.push_back(id);
            }
            bundles[e].push_back(bd);
        }
    }
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> inc = g.incident(v);
        std::sort(inc.begin(), inc.end());
        for (int c : inst.lists[v]) {
            std::vector<std::string> kids;
            for (int e : inc) {
                bool first_end = g.edge(e).u == v;
                for (auto& bd : bundles[e]) {
                    auto& x = bd.ids;
                    if (bd.color != c) {
                        kids.push_back("(P " + join(x) + ")");
                    } else if (!p_only) {
                        // middle leaf differs between the two ends
                        kids.push_back(first_end ? "(Q " + x[0] + " " + x[1] + " " + x[2] + ")"
                                                 : "(Q " + x[1] + " " + x[0] + " " + x[2] + ")");
                    } else if (first_end) {
                        kids.push_back("(P (P " + x[0] + " " + x[1] + ") (P " + x[2] + " " + x[3] + ") (P " + x[4] + " " +
                                       x[5] + "))");
                    } else {
                        kids.push_back("(P (P " + x[4] + " " + x[1] + ") (P " + x[2] + " " + x[5] + ") (P " + x[0] + " " +
                                       x[3] + "))");
                    }
                }
            }
            if (kids.empty()) continue;
            out << "d " << g.name(v) << " " << (kids.size() == 1 ? kids[0] : "(P " + join(kids) + ")") << "\n";
        }
    }
    return parse_choosable(out.str());
}

ListColoringInstance random_listcol(uint64_t seed, int n, int colors) {
    if (n < 3 || colors < 1) throw std::invalid_argument("random_listcol: need n >= 3 and colors >= 1");
    std::mt19937 rng((uint32_t)(seed * 40503u + 7));
    ListColoringInstance inst;
    MultiGraph& g = inst.g;
    for (int v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v));
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    int k = 0;
    std::set<std::pair<int, int>> have;
    auto add = [&](int a, int b) {
        have.insert(std::minmax(a, b));
        g.add_edge("e" + std::to_string(k++), a, b);
    };
    for (int i = 0; i < n; ++i) add(perm[i], perm[(i + 1) % n]);
    int extra = (int)(rng() % (2 * n));
    for (int t = 0; t < extra; ++t) {
        int a = (int)(rng() % n), b = (int)(rng() % n);
        if (a == b || have.count(std::minmax(a, b))) continue;
        MultiGraph h = g;
        h.add_edge("tmp", a, b);
        if (is_planar_graph(h)) add(a, b);
    }
    inst.lists.resize(n);
    for (int v = 0; v < n; ++v) {
        int sz = 1 + (int)(rng() % colors);
        std::vector<int> all(colors);
        for (int c = 0; c < colors; ++c) all[c] = c + 1;
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(sz);
        std::sort(all.begin(), all.end());
        inst.lists[v] = all;
    }
    return inst;
}

}  // namespace fpq
