#include "fpq/spqr.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace fpq {

const char* node_type_name(NodeType t) {
    switch (t) {
        case NodeType::S: return "S";
        case NodeType::P: return "P";
        case NodeType::R: return "R";
        default: return "Q";
    }
}

namespace {

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                     boost::property<boost::edge_index_t, int>>;

// ids >= 0 real edges, ids < 0 virtual pairs (~k)
struct WEdge {
    int a, b, id;
};
using Comp = std::vector<WEdge>;

struct Raw {
    NodeType type;
    Comp edges;
};

std::vector<int> comp_vertices(const Comp& c) {
    std::vector<int> v;
    for (auto& e : c) v.push_back(e.a), v.push_back(e.b);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// separation pair of a simple biconnected component: a, and a cut vertex of C - a
bool find_split(const Comp& c, int& sa, int& sb, std::vector<int>& side) {
    auto vs = comp_vertices(c);
    int n = (int)vs.size();
    std::map<int, int> id;
    for (int i = 0; i < n; ++i) id[vs[i]] = i;
    std::vector<std::vector<int>> adj(n);
    for (auto& e : c) adj[id[e.a]].push_back(id[e.b]), adj[id[e.b]].push_back(id[e.a]);
    for (int a = 0; a < n; ++a) {
        std::vector<int> disc(n, -1), low(n, 0);
        int timer = 0, cut = -1;
        int start = a == 0 ? 1 : 0;
        std::function<void(int, int)> dfs = [&](int x, int p) {
            disc[x] = low[x] = timer++;
            int kids = 0;
            for (int y : adj[x]) {
                if (y == a || y == p) continue;
                if (disc[y] < 0) {
                    ++kids;
                    dfs(y, x);
                    low[x] = std::min(low[x], low[y]);
                    if (p >= 0 && low[y] >= disc[x] && cut < 0) cut = x;
                } else {
                    low[x] = std::min(low[x], disc[y]);
                }
            }
            if (p < 0 && kids > 1 && cut < 0) cut = x;
        };
        dfs(start, -1);
        if (cut < 0) continue;
        // one component of C - {a, cut}
        std::vector<char> seen(n, 0);
        seen[a] = seen[cut] = 1;
        int s0 = -1;
        for (int y : adj[cut])
            if (!seen[y]) {
                s0 = y;
                break;
            }
        std::vector<int> st{s0};
        seen[s0] = 1;
        side.clear();
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            side.push_back(vs[x]);
            for (int y : adj[x])
                if (!seen[y]) seen[y] = 1, st.push_back(y);
        }
        sa = vs[a];
        sb = vs[cut];
        return true;
    }
    return false;
}

void split_all(Comp c, int& next_virtual, std::vector<Raw>& out) {
    auto vs = comp_vertices(c);
    if (vs.size() == 2) {
        out.push_back({NodeType::P, c});
        return;
    }
    // bundles of parallel edges
    std::map<std::pair<int, int>, std::vector<int>> bundle;
    for (int i = 0; i < (int)c.size(); ++i)
        bundle[{std::min(c[i].a, c[i].b), std::max(c[i].a, c[i].b)}].push_back(i);
    for (auto& [ab, idx] : bundle) {
        if (idx.size() < 2) continue;
        int k = ~(next_virtual++);
        Comp b, rest;
        std::set<int> in(idx.begin(), idx.end());
        for (int i = 0; i < (int)c.size(); ++i) (in.count(i) ? b : rest).push_back(c[i]);
        b.push_back({ab.first, ab.second, k});
        rest.push_back({ab.first, ab.second, k});
        out.push_back({NodeType::P, b});
        split_all(rest, next_virtual, out);
        return;
    }
    std::map<int, int> deg;
    for (auto& e : c) ++deg[e.a], ++deg[e.b];
    bool cyc = true;
    for (auto& [x, d] : deg) cyc &= d == 2;
    if (cyc) {
        out.push_back({NodeType::S, c});
        return;
    }
    int a = -1, b = -1;
    std::vector<int> side;
    if (!find_split(c, a, b, side)) {
        out.push_back({NodeType::R, c});
        return;
    }
    std::set<int> sv(side.begin(), side.end());
    Comp c1, c2;
    for (auto& e : c) (sv.count(e.a) || sv.count(e.b) ? c1 : c2).push_back(e);
    int k = ~(next_virtual++);
    c1.push_back({a, b, k});
    c2.push_back({a, b, k});
    split_all(c1, next_virtual, out);
    split_all(c2, next_virtual, out);
}

// merge bonds with bonds and polygons with polygons across shared virtual edges
void merge_same_type(std::vector<Raw>& comps) {
    bool again = true;
    while (again) {
        again = false;
        std::map<int, std::vector<int>> where;
        for (int i = 0; i < (int)comps.size(); ++i)
            for (auto& e : comps[i].edges)
                if (e.id < 0) where[e.id].push_back(i);
        for (auto& [vid, ci] : where) {
            if (ci.size() != 2) continue;
            int x = ci[0], y = ci[1];
            if (x == y || comps[x].type != comps[y].type || comps[x].type == NodeType::R) continue;
            Comp merged;
            for (int i : {x, y})
                for (auto& e : comps[i].edges)
                    if (e.id != vid) merged.push_back(e);
            comps[x].edges = merged;
            comps.erase(comps.begin() + y);
            again = true;
            break;
        }
    }
}

void embed_r(SPQRNode& nd) {
    int n = (int)nd.verts.size();
    std::map<int, int> id;
    for (int i = 0; i < n; ++i) id[nd.verts[i]] = i;
    BGraph bg(n);
    for (int i = 0; i < (int)nd.skel.size(); ++i) boost::add_edge(id[nd.skel[i].a], id[nd.skel[i].b], i, bg);
    using Emb = std::vector<std::vector<boost::graph_traits<BGraph>::edge_descriptor>>;
    Emb emb(n);
    bool ok = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                  boost::boyer_myrvold_params::embedding = &emb[0]);
    if (!ok) throw NotPlanar();
    auto eidx = boost::get(boost::edge_index, bg);
    nd.rot.assign(n, {});
    for (int i = 0; i < n; ++i)
        for (auto& e : emb[i]) nd.rot[i].push_back(eidx[e]);
}

}  // namespace

bool is_planar_graph(const MultiGraph& g) {
    BGraph bg(g.n());
    std::set<std::pair<int, int>> seen;
    int k = 0;
    for (auto& e : g.edges()) {
        auto key = std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
        if (seen.insert(key).second) boost::add_edge(e.u, e.v, k++, bg);
    }
    return boost::boyer_myrvold_planarity_test(bg);
}

std::optional<RotationSystem> planar_embedding(const MultiGraph& g) {
    BGraph bg(g.n());
    std::map<std::pair<int, int>, std::vector<int>> bundle;
    for (int e = 0; e < g.m(); ++e) {
        auto key = std::make_pair(std::min(g.edge(e).u, g.edge(e).v), std::max(g.edge(e).u, g.edge(e).v));
        auto& b = bundle[key];
        if (b.empty()) boost::add_edge(key.first, key.second, e, bg);
        b.push_back(e);
    }
    using Emb = std::vector<std::vector<boost::graph_traits<BGraph>::edge_descriptor>>;
    Emb emb(g.n());
    if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                             boost::boyer_myrvold_params::embedding = &emb[0]))
        return std::nullopt;
    auto eidx = boost::get(boost::edge_index, bg);
    RotationSystem rho(g.n());
    for (int v = 0; v < g.n(); ++v)
        for (auto& d : emb[v]) {
            int e = eidx[d];
            auto& b = bundle[{std::min(g.edge(e).u, g.edge(e).v), std::max(g.edge(e).u, g.edge(e).v)}];
            // the bundle is read in opposite directions at its two ends
            if (v == std::min(g.edge(e).u, g.edge(e).v)) rho[v].insert(rho[v].end(), b.begin(), b.end());
            else rho[v].insert(rho[v].end(), b.rbegin(), b.rend());
        }
    return rho;
}

SPQRTree decompose(const MultiGraph& g) {
    if (g.m() < 2 || !is_biconnected(g)) throw std::invalid_argument("graph is not biconnected");
    if (!is_planar_graph(g)) throw NotPlanar();
    Comp all;
    for (int e = 0; e < g.m(); ++e) all.push_back({g.edge(e).u, g.edge(e).v, e});
    std::vector<Raw> comps;
    int nv = 0;
    split_all(all, nv, comps);
    merge_same_type(comps);

    SPQRTree t;
    t.g = &g;
    // one tree node per component, then one Q-node per real edge
    int C = (int)comps.size();
    std::vector<int> qnode(g.m());
    t.nodes.resize(C + g.m());
    std::map<int, std::vector<std::pair<int, int>>> vwhere;  // virtual id -> (node, skel idx)
    for (int i = 0; i < C; ++i) {
        auto& nd = t.nodes[i];
        nd.type = comps[i].type;
        for (auto& e : comps[i].edges) {
            nd.skel.push_back({e.a, e.b, -1});
            if (e.id >= 0) nd.skel.back().link = C + e.id;
            else vwhere[e.id].push_back({i, (int)nd.skel.size() - 1});
        }
        nd.verts = comp_vertices(comps[i].edges);
    }
    for (auto& [vid, occ] : vwhere) {
        t.nodes[occ[0].first].skel[occ[0].second].link = occ[1].first;
        t.nodes[occ[1].first].skel[occ[1].second].link = occ[0].first;
    }
    for (int e = 0; e < g.m(); ++e) {
        auto& q = t.nodes[C + e];
        q.type = NodeType::Q;
        q.edge = e;
        q.verts = {std::min(g.edge(e).u, g.edge(e).v), std::max(g.edge(e).u, g.edge(e).v)};
        int owner = -1;
        for (int i = 0; i < C && owner < 0; ++i)
            for (auto& s : t.nodes[i].skel)
                if (s.link == C + e) owner = i;
        q.skel.push_back({g.edge(e).u, g.edge(e).v, owner});
    }

    // binarize polygons: peel one child at a time along the path
    auto link_replace = [&](int node, int old_nb, int new_nb) {
        for (auto& s : t.nodes[node].skel)
            if (s.link == old_nb) {
                s.link = new_nb;
                return;
            }
    };

    t.root = C + 0;
    // rooting by bfs from the root Q-node
    auto orient = [&] {
        std::vector<char> seen(t.nodes.size(), 0);
        std::deque<int> dq{t.root};
        seen[t.root] = 1;
        t.nodes[t.root].parent = -1;
        t.nodes[t.root].parent_edge = -1;
        while (!dq.empty()) {
            int x = dq.front();
            dq.pop_front();
            auto& nd = t.nodes[x];
            nd.children.clear();
            for (int i = 0; i < (int)nd.skel.size(); ++i) {
                int y = nd.skel[i].link;
                if (y == nd.parent) {
                    nd.parent_edge = i;
                    continue;
                }
                nd.children.push_back(y);
                t.nodes[y].parent = x;
                if (!seen[y]) seen[y] = 1, dq.push_back(y);
            }
            if (x == t.root) {
                nd.parent_edge = -1;
                nd.u = nd.skel[0].a;
                nd.v = nd.skel[0].b;
            } else {
                nd.u = nd.skel[nd.parent_edge].a;
                nd.v = nd.skel[nd.parent_edge].b;
            }
        }
    };
    orient();

    // S-nodes with more than two children become chains
    bool again = true;
    while (again) {
        again = false;
        for (int x = 0; x < (int)t.nodes.size(); ++x) {
            auto& nd = t.nodes[x];
            if (nd.type != NodeType::S || nd.children.size() <= 2) continue;
            // walk the cycle from pole u, away from the parent edge
            int k = (int)nd.skel.size();
            std::vector<int> path;  // skel edge indices u -> v
            std::vector<char> used(k, 0);
            used[nd.parent_edge] = 1;
            int cur = nd.u;
            for (int step = 0; step < k - 1; ++step) {
                for (int i = 0; i < k; ++i) {
                    if (used[i]) continue;
                    auto& s = nd.skel[i];
                    if (s.a == cur || s.b == cur) {
                        used[i] = 1;
                        path.push_back(i);
                        cur = s.a == cur ? s.b : s.a;
                        break;
                    }
                }
            }
            // first child stays, the rest moves to a new S-node with poles (w1, v)
            auto first = nd.skel[path[0]];
            int w1 = first.a == nd.u ? first.b : first.a;
            int y = (int)t.nodes.size();
            SPQRNode ns;
            ns.type = NodeType::S;
            for (size_t i = 1; i < path.size(); ++i) ns.skel.push_back(nd.skel[path[i]]);
            ns.skel.push_back({w1, nd.v, x});
            for (auto& s : ns.skel)
                if (s.link != x) link_replace(s.link, x, y);
            SPQRNode& nd2 = t.nodes[x];
            std::vector<SkelEdge> keep{nd2.skel[nd2.parent_edge], nd2.skel[path[0]], {w1, nd2.v, y}};
            nd2.skel = keep;
            t.nodes.push_back(ns);
            auto vs = [](const std::vector<SkelEdge>& sk) {
                std::vector<int> v;
                for (auto& s : sk) v.push_back(s.a), v.push_back(s.b);
                std::sort(v.begin(), v.end());
                v.erase(std::unique(v.begin(), v.end()), v.end());
                return v;
            };
            t.nodes[x].verts = vs(t.nodes[x].skel);
            t.nodes[y].verts = vs(t.nodes[y].skel);
            orient();
            again = true;
            break;
        }
    }

    for (auto& nd : t.nodes)
        if (nd.type == NodeType::R) embed_r(nd);

    // pertinent edges bottom-up
    t.pert_.assign(t.nodes.size(), {});
    for (int x : t.postorder()) {
        auto& nd = t.nodes[x];
        if (nd.type == NodeType::Q && x != t.root) t.pert_[x] = {nd.edge};
        for (int c : nd.children) t.pert_[x].insert(t.pert_[x].end(), t.pert_[c].begin(), t.pert_[c].end());
        std::sort(t.pert_[x].begin(), t.pert_[x].end());
    }
    return t;
}

std::vector<int> SPQRTree::postorder() const {
    std::vector<int> out, st{root};
    while (!st.empty()) {
        int x = st.back();
        st.pop_back();
        out.push_back(x);
        for (int c : nodes[x].children) st.push_back(c);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<int> SPQRTree::pertinent_leafset(int mu, int x) const {
    if (x != nodes[mu].u && x != nodes[mu].v) throw std::invalid_argument("vertex is not a pole");
    std::vector<int> out;
    for (int e : pert_[mu])
        if (g->edge(e).u == x || g->edge(e).v == x) out.push_back(e);
    return out;
}

std::vector<int> SPQRTree::inner_vertices(int mu) const {
    std::set<int> vs;
    for (int e : pert_[mu]) vs.insert(g->edge(e).u), vs.insert(g->edge(e).v);
    vs.erase(nodes[mu].u);
    vs.erase(nodes[mu].v);
    return {vs.begin(), vs.end()};
}

int SPQRTree::skel_edge_to(int mu, int nb) const {
    auto& sk = nodes[mu].skel;
    for (int i = 0; i < (int)sk.size(); ++i)
        if (sk[i].link == nb) return i;
    return -1;
}

std::string SPQRTree::dump() const {
    std::ostringstream os;
    std::function<void(int, int)> go = [&](int x, int depth) {
        auto& nd = nodes[x];
        os << std::string(2 * depth, ' ') << node_type_name(nd.type) << "#" << x << " poles(" << g->name(nd.u) << ","
           << g->name(nd.v) << ")";
        if (nd.type == NodeType::Q) os << " edge " << g->edge(nd.edge).id;
        else {
            os << " skel";
            for (auto& s : nd.skel) os << " " << g->name(s.a) << "-" << g->name(s.b) << "[" << s.link << "]";
        }
        os << "\n";
        for (int c : nd.children) go(c, depth + 1);
    };
    go(root, 0);
    return os.str();
}

Tree embedding_tree(const SPQRTree& t, int v) {
    const MultiGraph& g = *t.g;
    if (v < 0 || v >= g.n()) throw std::invalid_argument("unknown vertex");
    // tree nodes: one per SPQR node whose skeleton contains v
    std::vector<int> tn(t.nodes.size(), -1);
    Tree out;
    for (int x = 0; x < (int)t.nodes.size(); ++x) {
        auto& nd = t.nodes[x];
        if (!std::binary_search(nd.verts.begin(), nd.verts.end(), v)) continue;
        if (nd.type == NodeType::Q) tn[x] = out.add_node(Kind::Leaf, nd.edge);
        else tn[x] = out.add_node(nd.type == NodeType::R ? Kind::Q : Kind::P);
    }
    for (int x = 0; x < (int)t.nodes.size(); ++x) {
        if (tn[x] < 0) continue;
        auto& nd = t.nodes[x];
        std::vector<int> order;
        if (nd.type == NodeType::R) {
            int vi = (int)(std::lower_bound(nd.verts.begin(), nd.verts.end(), v) - nd.verts.begin());
            order = nd.rot[vi];
        } else {
            for (int i = 0; i < (int)nd.skel.size(); ++i)
                if (nd.skel[i].a == v || nd.skel[i].b == v) order.push_back(i);
        }
        for (int i : order) {
            int y = nd.skel[i].link;
            if (tn[y] < 0) throw std::logic_error("embedding tree: neighbor misses the vertex");
            out.nodes[tn[x]].adj.push_back(tn[y]);
        }
    }
    out.root_hint = -1;
    for (int x = 0; x < (int)t.nodes.size(); ++x)
        if (tn[x] >= 0 && t.nodes[x].type != NodeType::Q) out.root_hint = tn[x];
    if (out.root_hint < 0) {
        // v lies only on Q-nodes: the whole graph is one bundle? cannot happen, Q-nodes hang off components
        throw std::logic_error("embedding tree without internal node");
    }
    normalize(out);
    return out;
}

}  // namespace fpq
