#include "fpq/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fpq {

namespace {

// odometer over per-vertex candidate rotations; f returns false to stop
template <class F>
void for_each_combination(const MultiGraph& h, const std::vector<std::vector<Order>>& cand, double cap, F&& f) {
    double prod = 1;
    for (auto& c : cand) {
        if (c.empty()) return;
        prod *= (double)c.size();
    }
    if (prod > cap) throw CapExceeded("oracle: too many rotation combinations");
    int n = h.n();
    std::vector<size_t> idx(n, 0);
    RotationSystem rho(n);
    for (int v = 0; v < n; ++v) rho[v] = cand[v][0];
    while (true) {
        if (h.n() - h.m() + trace_faces(h, rho) == 2 && !f(rho)) return;
        int v = 0;
        for (; v < n; ++v) {
            if (++idx[v] < cand[v].size()) {
                rho[v] = cand[v][idx[v]];
                break;
            }
            idx[v] = 0;
            rho[v] = cand[v][0];
        }
        if (v == n) return;
    }
}

std::vector<Order> orders_of(const Tree& t, const OracleCaps& caps) {
    if (count_orders(t) > caps.max_orders_per_tree) throw CapExceeded("oracle: tree has too many orders");
    auto os = enumerate_orders(t, caps.max_orders_per_tree);
    for (auto& o : os) o = normalize_cyclic(o);
    return os;
}

}  // namespace

bool oracle_test(const ChoosableGraph& cg, const OracleCaps& caps, Witness* out) {
    const MultiGraph& g = cg.g;
    if (!is_connected(g)) throw std::invalid_argument("graph not connected");
    std::vector<std::vector<Order>> cand(g.n());
    std::vector<std::map<Order, int>> owner(g.n());
    for (int v = 0; v < g.n(); ++v) {
        for (int i = 0; i < (int)cg.D[v].size(); ++i)
            for (auto& o : orders_of(cg.D[v][i], caps)) owner[v].emplace(o, i);
        for (auto& [o, i] : owner[v]) cand[v].push_back(o);
        if (cand[v].empty()) return false;
    }
    bool found = false;
    for_each_combination(g, cand, caps.max_combinations, [&](const RotationSystem& rho) {
        found = true;
        if (out) {
            out->rotation = rho;
            out->assignment.assign(g.n(), -1);
            for (int v = 0; v < g.n(); ++v) out->assignment[v] = owner[v].at(rho[v]);
        }
        return false;
    });
    return found;
}

PsiSet oracle_psi(const ChoosableGraph& cg, const SPQRTree& t, int mu, const OracleCaps& caps) {
    const MultiGraph& g = cg.g;
    const auto& nd = t.nodes[mu];
    if (mu == t.root) throw std::invalid_argument("oracle_psi: root has no pertinent graph");
    const int EXT = g.m();
    int u = nd.u, v = nd.v;
    auto Eu = t.pertinent_leafset(mu, u), Ev = t.pertinent_leafset(mu, v);
    // H = G_mu plus the reference edge
    MultiGraph h;
    std::map<int, int> hv;
    std::vector<int> gv;
    auto vert = [&](int x) {
        auto it = hv.find(x);
        if (it != hv.end()) return it->second;
        int id = h.add_vertex(g.name(x));
        hv[x] = id;
        gv.push_back(x);
        return id;
    };
    std::map<int, int> he;  // label -> h edge
    std::vector<int> label_of;
    for (int e : t.pertinent_edges(mu)) {
        int a = vert(g.edge(e).u), b = vert(g.edge(e).v);
        he[e] = h.add_edge(g.edge(e).id, a, b);
        label_of.push_back(e);
    }
    he[EXT] = h.add_edge("__ref", vert(u), vert(v));
    label_of.push_back(EXT);

    auto to_h = [&](const Order& o) {
        Order r;
        for (int l : o) r.push_back(he.at(l));
        return r;
    };
    std::vector<std::vector<Order>> cand(h.n());
    for (int i = 0; i < h.n(); ++i) {
        int x = gv[i];
        std::set<Order> s;
        for (auto& T : cg.D[x]) {
            if (x == u || x == v) {
                auto& L = x == u ? Eu : Ev;
                if (!is_consecutive(T, L)) continue;
                for (auto& o : orders_of(project(T, L, EXT), caps)) s.insert(to_h(o));
            } else {
                for (auto& o : orders_of(T, caps)) s.insert(to_h(o));
            }
        }
        cand[i].assign(s.begin(), s.end());
    }
    std::set<std::pair<Order, Order>> pole_rot;
    int hu = hv.at(u), hvv = hv.at(v);
    for_each_combination(h, cand, caps.max_combinations, [&](const RotationSystem& rho) {
        pole_rot.insert({rho[hu], rho[hvv]});
        return true;
    });
    auto to_labels = [&](const Order& o) {
        Order r;
        for (int e : o) r.push_back(label_of[e]);
        return r;
    };
    auto omask = [&](const Tree& T, const std::vector<int>& L, const Order& sig) {
        if (!is_consecutive(T, L)) return 0;
        switch (orientation_of(T, L, sig, EXT)) {
            case Orientation::Cw: return 1;
            case Orientation::Ccw: return 2;
            case Orientation::Both: return 3;
            default: return 0;
        }
    };
    PsiSet out;
    for (auto& [ru, rv] : pole_rot) {
        auto su = to_labels(ru), sv = to_labels(rv);
        for (int a = 0; a < (int)cg.D[u].size(); ++a) {
            int mu_ = omask(cg.D[u][a], Eu, su);
            if (!mu_) continue;
            for (int b = 0; b < (int)cg.D[v].size(); ++b) {
                int mv = omask(cg.D[v][b], Ev, sv);
                for (int ou = 0; ou < 2; ++ou)
                    for (int ov = 0; ov < 2; ++ov)
                        if ((mu_ >> ou & 1) && (mv >> ov & 1)) out.push_back(pack_tuple(a, b, ou, ov));
            }
        }
    }
    psi_normalize(out);
    return out;
}

}  // namespace fpq
