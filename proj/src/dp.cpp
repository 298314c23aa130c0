#include "fpq/dp.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <set>
#include <sstream>

namespace fpq {

void psi_normalize(PsiSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

std::string psi_to_string(const PsiSet& s) {
    std::ostringstream os;
    for (auto x : s) {
        auto t = unpack_tuple(x);
        os << "<" << t.tu << "," << t.tv << "," << t.ou << "," << t.ov << ">";
    }
    return os.str();
}

std::optional<Preprocessed> preprocess(const ChoosableGraph& cg, const SPQRTree& t) {
    Preprocessed p;
    p.cg.g = cg.g;
    int n = cg.g.n();
    p.cg.D.resize(n);
    p.orig.resize(n);
    for (int v = 0; v < n; ++v) {
        Tree et = embedding_tree(t, v);
        for (int i = 0; i < (int)cg.D[v].size(); ++i) {
            Tree r = intersect(cg.D[v][i], et);
            if (r.null) continue;
            p.cg.D[v].push_back(r);
            p.orig[v].push_back(i);
        }
        if (p.cg.D[v].empty()) return std::nullopt;
    }
    return p;
}

DpEngine::DpEngine(const ChoosableGraph& cg_, const SPQRTree& t_, DpOptions o) : cg(cg_), t(t_), opt(o) {
    psi.resize(t.nodes.size());
    done.assign(t.nodes.size(), 0);
}

bool DpEngine::run() {
    for (int x : t.postorder()) {
        if (x == t.root) continue;
        psi[x] = compute(x);
        done[x] = 1;
        if (opt.early_exit && psi[x].empty()) return false;
    }
    return !psi[t.root_child()].empty();
}

PsiSet DpEngine::compute(int mu) {
    switch (t.nodes[mu].type) {
        case NodeType::Q: return psi_leaf(mu);
        case NodeType::S: return psi_s(mu);
        case NodeType::P: return psi_p(mu);
        default: return psi_r(mu);
    }
}

std::vector<DpEngine::Oriented> DpEngine::child_tuples(int c, int x, int y) const {
    if (!done[c]) throw std::logic_error("child not computed");
    auto& nd = t.nodes[c];
    bool same = nd.u == x && nd.v == y;
    if (!same && !(nd.u == y && nd.v == x)) throw std::logic_error("pole mismatch");
    std::vector<Oriented> out;
    out.reserve(psi[c].size());
    for (auto p : psi[c]) {
        auto tp = unpack_tuple(p);
        if (same) out.push_back({tp.tu, tp.tv, tp.ou, tp.ov});
        else out.push_back({tp.tv, tp.tu, tp.ov, tp.ou});
    }
    return out;
}

PsiSet DpEngine::psi_leaf(int mu) const {
    auto& nd = t.nodes[mu];
    PsiSet out;
    for (int a = 0; a < (int)cg.D[nd.u].size(); ++a)
        for (int b = 0; b < (int)cg.D[nd.v].size(); ++b)
            for (int o = 0; o < 4; ++o) out.push_back(pack_tuple(a, b, o >> 1, o & 1));
    psi_normalize(out);
    return out;
}

PsiSet DpEngine::psi_s(int mu) const {
    auto& nd = t.nodes[mu];
    if (nd.children.size() != 2) throw std::logic_error("S-node needs two children");
    int c1 = nd.children[0], c2 = nd.children[1];
    if (t.nodes[c1].u != nd.u && t.nodes[c1].v != nd.u) std::swap(c1, c2);
    int w = t.nodes[c1].u == nd.u ? t.nodes[c1].v : t.nodes[c1].u;
    auto A = child_tuples(c1, nd.u, w);
    auto B = child_tuples(c2, w, nd.v);
    // join on (T_w, o_w)
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> byw;
    for (auto& b : B) byw[{b.tx, b.ox}].push_back({b.ty, b.oy});
    PsiSet out;
    for (auto& a : A) {
        auto it = byw.find({a.ty, a.oy});
        if (it == byw.end()) continue;
        for (auto [tv, ov] : it->second) out.push_back(pack_tuple(a.tx, tv, a.ox, ov));
    }
    psi_normalize(out);
    return out;
}

namespace {

// skeletal tree of one pole tree plus what the P-node step needs from it
struct Side {
    bool ok = false;
    Tree skel;
    int pole_bnd = -1;
    std::vector<int> child_bnd;
    std::map<int, std::array<int, 3>> trip;
};

int bnd_node(const Tree& T, const std::vector<int>& L) {
    Boundary b = boundary(T, L);
    return b.is_edge ? -1 : b.node;
}

// pert tree contracted along the blocks; nullopt when some block is not consecutive
std::optional<Tree> skeletal(const Tree& T, const std::vector<int>* estar, int ext,
                             const std::vector<std::pair<std::vector<int>, int>>& blocks) {
    Tree P = T;
    if (estar) {
        if (!is_consecutive(T, *estar)) return std::nullopt;
        P = project(T, *estar, ext);
    }
    for (auto& [blk, lab] : blocks) {
        if (!is_consecutive(P, blk)) return std::nullopt;
        contract_block(P, blk, lab);
    }
    return P;
}

// x xor c, or the constant c when var < 0; free when var == -2
struct Ex {
    int var, c;
};
const Ex FREE{-2, 0};

struct Lit {
    int kind;  // 0 false, 1 true, 2 literal
    int l;
};
Lit eq(Ex x, int val) {
    if (x.var == -1) return {x.c == val ? 1 : 0, 0};
    return {2, lit(x.var, (val ^ x.c) != 0)};
}
Lit lnot(Lit a) { return a.kind == 2 ? Lit{2, neg(a.l)} : Lit{1 - a.kind, 0}; }

struct Builder {
    TwoSatFormula f;
    bool unsat = false;
    void add_or(Lit a, Lit b) {
        if (a.kind == 1 || b.kind == 1) return;
        if (a.kind == 0 && b.kind == 0) unsat = true;
        else if (a.kind == 0) f.add_unit(b.l);
        else if (b.kind == 0) f.add_unit(a.l);
        else f.add_clause(a.l, b.l);
    }
};

}  // namespace

PsiSet DpEngine::psi_p(int mu) const {
    auto& nd = t.nodes[mu];
    int u = nd.u, v = nd.v;
    int k = (int)nd.children.size();
    PsiSet out;
    if (k == 1) {
        for (auto& o : child_tuples(nd.children[0], u, v)) out.push_back(pack_tuple(o.tx, o.ty, o.ox, o.oy));
        psi_normalize(out);
        return out;
    }
    const int m = cg.g.m(), EXT = m;
    int Du = (int)cg.D[u].size(), Dv = (int)cg.D[v].size();
    // allowed (o_u, o_v) per child and tree pair, bit 2*ou+ov
    std::vector<std::vector<uint8_t>> allowed(k, std::vector<uint8_t>(Du * Dv, 0));
    for (int i = 0; i < k; ++i)
        for (auto& o : child_tuples(nd.children[i], u, v)) allowed[i][o.tx * Dv + o.ty] |= 1 << (2 * o.ox + o.oy);

    auto prep = [&](int x) {
        auto estar = t.pertinent_leafset(mu, x);
        std::vector<std::pair<std::vector<int>, int>> blocks;
        for (int i = 0; i < k; ++i) blocks.push_back({t.pertinent_leafset(nd.children[i], x), m + 1 + i});
        std::vector<Side> sides(cg.D[x].size());
        for (size_t a = 0; a < cg.D[x].size(); ++a) {
            auto& T = cg.D[x][a];
            auto sk = skeletal(T, &estar, EXT, blocks);
            if (!sk) continue;
            Side& s = sides[a];
            s.ok = true;
            s.skel = *sk;
            s.pole_bnd = bnd_node(T, estar);
            for (auto& [blk, lab] : blocks) s.child_bnd.push_back(bnd_node(T, blk));
            for (auto& tr : orientation_triples(s.skel)) s.trip[tr.node] = {tr.a, tr.b, tr.c};
        }
        return sides;
    };
    auto su = prep(u), sv = prep(v);

    for (int a = 0; a < Du; ++a) {
        if (!su[a].ok) continue;
        for (int b = 0; b < Dv; ++b) {
            if (!sv[b].ok) continue;
            bool dead = false;
            for (int i = 0; i < k && !dead; ++i) dead = allowed[i][a * Dv + b] == 0;
            if (dead) continue;
            const Side& A = su[a];
            const Side& B = sv[b];

            if (opt.p_enumerate) {
                for (auto& pi : enumerate_orders(A.skel)) {
                    auto ma = match(A.skel, pi);
                    Order rev(pi.rbegin(), pi.rend());
                    auto mv = match(B.skel, rev);
                    if (!ma || !mv) continue;
                    auto omask = [](const std::map<int, int>& mm, int node) {
                        return node < 0 ? 3 : 1 << mm.at(node);
                    };
                    bool ok = true;
                    for (int i = 0; i < k && ok; ++i) {
                        int mu_ = omask(*ma, A.child_bnd[i]), mv_ = omask(*mv, B.child_bnd[i]);
                        bool any = false;
                        for (int ou = 0; ou < 2; ++ou)
                            for (int ov = 0; ov < 2; ++ov)
                                if ((mu_ >> ou & 1) && (mv_ >> ov & 1) && (allowed[i][a * Dv + b] >> (2 * ou + ov) & 1))
                                    any = true;
                        ok = any;
                    }
                    if (!ok) continue;
                    int pu = omask(*ma, A.pole_bnd), pv = omask(*mv, B.pole_bnd);
                    for (int ou = 0; ou < 2; ++ou)
                        for (int ov = 0; ov < 2; ++ov)
                            if ((pu >> ou & 1) && (pv >> ov & 1)) out.push_back(pack_tuple(a, b, ou, ov));
                }
                continue;
            }

            Tree I = intersect(A.skel, mirror(B.skel));
            if (I.null) continue;
            Builder bd;
            std::map<int, int> var_of;
            auto expr = [&](const Side& s, int node, bool vside) -> Ex {
                if (node < 0) return FREE;
                auto& tr = s.trip.at(node);
                Median md = median(I, tr[0], tr[1], tr[2]);
                int c = md.ord ^ (vside ? 1 : 0);
                Kind kd = I.nodes[md.node].kind;
                if (kd == Kind::F) return {-1, c};
                if (kd == Kind::P && I.degree(md.node) > 3) throw std::logic_error("wide P-node at a Q median");
                auto it = var_of.find(md.node);
                if (it == var_of.end()) it = var_of.emplace(md.node, bd.f.add_var()).first;
                return {it->second, c};
            };
            for (int i = 0; i < k && !bd.unsat; ++i) {
                Ex X = expr(A, A.child_bnd[i], false), Y = expr(B, B.child_bnd[i], true);
                int mask = allowed[i][a * Dv + b];
                if (X.var == -2 && Y.var == -2) continue;
                if (X.var == -2 || Y.var == -2) {
                    // project the free coordinate away
                    bool fx = X.var == -2;
                    Ex Z = fx ? Y : X;
                    int can[2] = {0, 0};
                    for (int ou = 0; ou < 2; ++ou)
                        for (int ov = 0; ov < 2; ++ov)
                            if (mask >> (2 * ou + ov) & 1) can[fx ? ov : ou] = 1;
                    for (int z = 0; z < 2; ++z)
                        if (!can[z]) bd.add_or(lnot(eq(Z, z)), lnot(eq(Z, z)));
                    continue;
                }
                for (int ou = 0; ou < 2; ++ou)
                    for (int ov = 0; ov < 2; ++ov)
                        if (!(mask >> (2 * ou + ov) & 1)) bd.add_or(lnot(eq(X, ou)), lnot(eq(Y, ov)));
            }
            if (bd.unsat) continue;
            Ex PU = expr(A, A.pole_bnd, false), PV = expr(B, B.pole_bnd, true);
            for (int ou = 0; ou < 2; ++ou)
                for (int ov = 0; ov < 2; ++ov) {
                    std::vector<int> as;
                    bool ok = true;
                    for (auto [X, val] : {std::pair{PU, ou}, std::pair{PV, ov}}) {
                        if (X.var == -2) continue;
                        Lit l = eq(X, val);
                        if (l.kind == 0) ok = false;
                        else if (l.kind == 2) as.push_back(l.l);
                    }
                    if (ok && twosat_solve_assuming(bd.f, as)) out.push_back(pack_tuple(a, b, ou, ov));
                }
        }
    }
    psi_normalize(out);
    return out;
}

namespace {

struct Table {
    std::vector<int> vars;  // sorted skeleton vertex indices
    std::vector<std::vector<int>> rows;
};

Table join(const Table& A, const Table& B, const std::vector<int>& outv) {
    std::vector<int> common;
    std::set_intersection(A.vars.begin(), A.vars.end(), B.vars.begin(), B.vars.end(), std::back_inserter(common));
    auto pos = [](const std::vector<int>& vs, int x) {
        return (int)(std::lower_bound(vs.begin(), vs.end(), x) - vs.begin());
    };
    std::map<std::vector<int>, std::vector<int>> idx;
    for (int r = 0; r < (int)B.rows.size(); ++r) {
        std::vector<int> key;
        for (int c : common) key.push_back(B.rows[r][pos(B.vars, c)]);
        idx[key].push_back(r);
    }
    std::set<std::vector<int>> res;
    for (auto& ra : A.rows) {
        std::vector<int> key;
        for (int c : common) key.push_back(ra[pos(A.vars, c)]);
        auto it = idx.find(key);
        if (it == idx.end()) continue;
        for (int r : it->second) {
            auto& rb = B.rows[r];
            std::vector<int> o;
            for (int x : outv) {
                auto ia = std::lower_bound(A.vars.begin(), A.vars.end(), x);
                o.push_back(ia != A.vars.end() && *ia == x ? ra[ia - A.vars.begin()] : rb[pos(B.vars, x)]);
            }
            res.insert(o);
        }
    }
    return {outv, {res.begin(), res.end()}};
}

}  // namespace

PsiSet DpEngine::psi_r(int mu) const {
    auto& nd = t.nodes[mu];
    const int m = cg.g.m(), EXT = m;
    int n = (int)nd.verts.size();
    auto vi = [&](int x) { return (int)(std::lower_bound(nd.verts.begin(), nd.verts.end(), x) - nd.verts.begin()); };
    std::vector<std::pair<int, int>> edges;
    for (auto& s : nd.skel) edges.push_back({vi(s.a), vi(s.b)});
    auto scd = scd_decompose(n, edges, nd.rot, nd.parent_edge, opt.scd);
    width = std::max(width, scd.width());

    int iu = vi(nd.u), iv = vi(nd.v);
    std::vector<std::vector<int>> estar(n);
    estar[iu] = t.pertinent_leafset(mu, nd.u);
    estar[iv] = t.pertinent_leafset(mu, nd.v);
    // blocks of child edges at every skeleton vertex
    std::vector<std::map<int, std::vector<int>>> blk(n);
    for (int s = 0; s < (int)nd.skel.size(); ++s) {
        if (s == nd.parent_edge) continue;
        for (int x : {nd.skel[s].a, nd.skel[s].b}) blk[vi(x)][s] = t.pertinent_leafset(nd.skel[s].link, x);
    }
    // compliance per vertex and tree: ok flag, orientation masks per skeleton edge, pole mask
    struct Comp {
        bool ok = false;
        std::map<int, int> mask;
        int pole = 3;
    };
    PsiSet out;
    for (int eps = 0; eps < 2; ++eps) {
        std::vector<std::vector<Comp>> comp(n);
        for (int i = 0; i < n; ++i) {
            int x = nd.verts[i];
            Order order;
            std::vector<int> rot = nd.rot[i];
            if (eps) std::reverse(rot.begin(), rot.end());
            for (int s : rot) order.push_back(s == nd.parent_edge ? EXT : m + 1 + s);
            std::vector<std::pair<std::vector<int>, int>> blocks;
            for (auto& [s, L] : blk[i]) blocks.push_back({L, m + 1 + s});
            bool pole = i == iu || i == iv;
            comp[i].resize(cg.D[x].size());
            for (size_t a = 0; a < cg.D[x].size(); ++a) {
                auto& T = cg.D[x][a];
                auto sk = skeletal(T, pole ? &estar[i] : nullptr, EXT, blocks);
                if (!sk) continue;
                auto mm = match(*sk, order);
                if (!mm) continue;
                auto omask = [&](const std::vector<int>& L) {
                    int b = bnd_node(T, L);
                    if (b < 0) return 3;
                    auto it = mm->find(b);
                    if (it == mm->end()) throw std::logic_error("boundary node missing in skeletal tree");
                    return 1 << it->second;
                };
                Comp& c = comp[i][a];
                c.ok = true;
                for (auto& [s, L] : blk[i]) c.mask[s] = omask(L);
                if (pole) c.pole = omask(estar[i]);
            }
        }
        std::vector<Table> tab(scd.nodes.size());
        bool empty = false;
        // nodes are stored children first
        for (int b = 0; b < (int)scd.nodes.size() && !empty; ++b) {
            auto& sn = scd.nodes[b];
            if (sn.left < 0) {
                int s = sn.edge;
                int x = nd.skel[s].a, y = nd.skel[s].b, ix = vi(x), iy = vi(y);
                Table T;
                T.vars = {std::min(ix, iy), std::max(ix, iy)};
                std::set<std::vector<int>> rows;
                for (auto& o : child_tuples(nd.skel[s].link, x, y)) {
                    auto& cx = comp[ix][o.tx];
                    auto& cy = comp[iy][o.ty];
                    if (!cx.ok || !cy.ok || !(cx.mask.at(s) >> o.ox & 1) || !(cy.mask.at(s) >> o.oy & 1)) continue;
                    rows.insert(ix < iy ? std::vector<int>{o.tx, o.ty} : std::vector<int>{o.ty, o.tx});
                }
                T.rows.assign(rows.begin(), rows.end());
                tab[b] = std::move(T);
            } else {
                tab[b] = join(tab[sn.left], tab[sn.right], sn.middle);
            }
            if (tab[b].rows.empty()) empty = true;
        }
        if (empty) continue;
        auto& root = tab[scd.root];
        int pu = (int)(std::find(root.vars.begin(), root.vars.end(), iu) - root.vars.begin());
        int pv = (int)(std::find(root.vars.begin(), root.vars.end(), iv) - root.vars.begin());
        if (root.vars.size() != 2) throw std::logic_error("root middle set is not the pole pair");
        for (auto& r : root.rows) {
            int a = r[pu], b = r[pv];
            for (int ou = 0; ou < 2; ++ou)
                for (int ov = 0; ov < 2; ++ov)
                    if ((comp[iu][a].pole >> ou & 1) && (comp[iv][b].pole >> ov & 1))
                        out.push_back(pack_tuple(a, b, ou, ov));
        }
    }
    psi_normalize(out);
    return out;
}

bool witness_valid(const ChoosableGraph& cg, const Witness& w) {
    const MultiGraph& g = cg.g;
    if ((int)w.assignment.size() != g.n() || (int)w.rotation.size() != g.n()) return false;
    if (!is_planar_rotation(g, w.rotation)) return false;
    for (int v = 0; v < g.n(); ++v) {
        int a = w.assignment[v];
        if (a < 0 || a >= (int)cg.D[v].size()) return false;
        if (!represents(cg.D[v][a], w.rotation[v])) return false;
    }
    return true;
}

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

Analysis analyze(const ChoosableGraph& cg, DpOptions opt, bool want_witness) {
    Analysis an;
    auto t0 = std::chrono::steady_clock::now();
    const MultiGraph& g = cg.g;
    if (g.n() == 0 || g.m() < 2 || !is_biconnected(g)) {
        an.verdict = Verdict::Unsupported;
        an.reason = "graph is not biconnected";
        return an;
    }
    if (!is_planar_graph(g)) {
        an.planar = false;
        an.reason = "graph is not planar";
        an.timings_ms["planarity"] = ms_since(t0);
        return an;
    }
    auto t1 = std::chrono::steady_clock::now();
    SPQRTree t = decompose(g);
    an.timings_ms["decompose"] = ms_since(t1);
    auto t2 = std::chrono::steady_clock::now();
    auto pre = preprocess(cg, t);
    an.timings_ms["preprocess"] = ms_since(t2);
    if (!pre) {
        an.reason = "some vertex has no tree compatible with its embedding tree";
        return an;
    }
    auto t3 = std::chrono::steady_clock::now();
    t.g = &pre->cg.g;
    DpEngine dp(pre->cg, t, opt);
    bool yes = dp.run();
    an.timings_ms["dp"] = ms_since(t3);
    an.width = dp.width;
    for (int x : t.postorder()) {
        if (x == t.root || !dp.done[x]) continue;
        an.psi_sizes.push_back({std::string(node_type_name(t.nodes[x].type)) + "#" + std::to_string(x), dp.psi[x].size()});
    }
    an.verdict = yes ? Verdict::Yes : Verdict::No;
    if (!yes) an.reason = "no admissible tuple survives";
    if (yes && want_witness) {
        auto t4 = std::chrono::steady_clock::now();
        an.witness = extract_witness(cg);
        an.timings_ms["witness"] = ms_since(t4);
    }
    an.timings_ms["total"] = ms_since(t0);
    return an;
}

bool test(const ChoosableGraph& cg) {
    auto an = analyze(cg);
    if (an.verdict == Verdict::Unsupported) throw std::invalid_argument(an.reason);
    return an.verdict == Verdict::Yes;
}

std::optional<Witness> extract_witness(const ChoosableGraph& cg) {
    if (!test(cg)) return std::nullopt;
    ChoosableGraph w = cg;
    int n = cg.g.n();
    Witness out;
    out.assignment.assign(n, 0);
    // fix one tree per vertex
    for (int v = 0; v < n; ++v) {
        auto all = w.D[v];
        bool fixed = false;
        for (int i = 0; i < (int)all.size() && !fixed; ++i) {
            w.D[v] = {all[i]};
            if (all.size() == 1 || test(w)) out.assignment[v] = i, fixed = true;
        }
        if (!fixed) throw std::logic_error("witness: no tree keeps the instance feasible");
    }
    // narrow every tree to a single order
    for (int v = 0; v < n; ++v) {
        while (true) {
            Tree& T = w.D[v][0];
            int x = -1;
            for (int y : T.internal_nodes())
                if (T.nodes[y].kind != Kind::F && T.degree(y) >= 3) {
                    x = y;
                    break;
                }
            if (x < 0) break;
            std::vector<Tree> cands;
            if (T.nodes[x].kind == Kind::Q || T.degree(x) == 3) {
                Tree a = T, b = T;
                a.nodes[x].kind = b.nodes[x].kind = Kind::F;
                std::reverse(b.nodes[x].adj.begin(), b.nodes[x].adj.end());
                normalize(a);
                normalize(b);
                cands = {a, b};
            } else {
                auto& adj = T.nodes[x].adj;
                auto b0 = T.side(x, adj[0]);
                for (size_t j = 1; j < adj.size(); ++j) {
                    auto s = b0, bj = T.side(x, adj[j]);
                    s.insert(s.end(), bj.begin(), bj.end());
                    Tree c = T;
                    if (reduce(c, s)) cands.push_back(c);
                }
            }
            bool ok = false;
            Tree keep = T;
            for (auto& c : cands) {
                w.D[v][0] = c;
                if (test(w)) {
                    ok = true;
                    break;
                }
            }
            if (!ok) {
                w.D[v][0] = keep;
                throw std::logic_error("witness: refinement lost feasibility");
            }
        }
    }
    out.rotation.resize(n);
    for (int v = 0; v < n; ++v) {
        Order o = first_order(w.D[v][0]);
        // rotation lists edges around v; leaf labels are edge indices
        out.rotation[v] = o;
    }
    if (!witness_valid(cg, out)) throw std::logic_error("witness failed validation");
    return out;
}

}  // namespace fpq
