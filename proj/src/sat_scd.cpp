#include "fpq/sat_scd.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <stdexcept>

namespace fpq {

std::optional<std::vector<char>> twosat_solve(const TwoSatFormula& f) { return twosat_solve_assuming(f, {}); }

std::optional<std::vector<char>> twosat_solve_assuming(const TwoSatFormula& f, const std::vector<int>& assumptions) {
    int N = 2 * f.vars;
    std::vector<std::vector<int>> adj(N);
    auto add = [&](int a, int b) {
        if (a < 0 || a >= N || b < 0 || b >= N) throw std::invalid_argument("literal out of range");
        adj[neg(a)].push_back(b);
        adj[neg(b)].push_back(a);
    };
    for (auto [a, b] : f.clauses) add(a, b);
    for (int a : assumptions) add(a, a);
    // tarjan, iterative
    std::vector<int> idx(N, -1), low(N, 0), comp(N, -1), st;
    std::vector<char> on(N, 0);
    int counter = 0, ncomp = 0;
    for (int s = 0; s < N; ++s) {
        if (idx[s] >= 0) continue;
        std::vector<std::pair<int, size_t>> call{{s, 0}};
        idx[s] = low[s] = counter++;
        st.push_back(s);
        on[s] = 1;
        while (!call.empty()) {
            auto& [x, i] = call.back();
            if (i < adj[x].size()) {
                int y = adj[x][i++];
                if (idx[y] < 0) {
                    idx[y] = low[y] = counter++;
                    st.push_back(y);
                    on[y] = 1;
                    call.push_back({y, 0});
                } else if (on[y]) {
                    low[x] = std::min(low[x], idx[y]);
                }
            } else {
                int xx = x;
                if (low[xx] == idx[xx]) {
                    while (true) {
                        int y = st.back();
                        st.pop_back();
                        on[y] = 0;
                        comp[y] = ncomp;
                        if (y == xx) break;
                    }
                    ++ncomp;
                }
                call.pop_back();
                if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[xx]);
            }
        }
    }
    std::vector<char> val(f.vars);
    for (int v = 0; v < f.vars; ++v) {
        if (comp[2 * v] == comp[2 * v + 1]) return std::nullopt;
        val[v] = comp[2 * v] < comp[2 * v + 1];
    }
    return val;
}

std::vector<int> middle_set(int n, const std::vector<std::pair<int, int>>& edges, const std::vector<char>& in) {
    std::vector<char> a(n, 0), b(n, 0);
    for (int e = 0; e < (int)edges.size(); ++e) {
        auto& s = in[e] ? a : b;
        s[edges[e].first] = s[edges[e].second] = 1;
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (a[v] && b[v]) out.push_back(v);
    return out;
}

bool is_noose_cut(int n, const std::vector<std::pair<int, int>>& edges, const RotationSystem& rot,
                  const std::vector<char>& in) {
    int m = (int)edges.size();
    bool any_in = false, any_out = false;
    for (int e = 0; e < m; ++e) (in[e] ? any_in : any_out) = true;
    if (!any_in || !any_out) return true;
    // angles (v, i): between rot[v][i] and rot[v][i+1]; assign faces by tracing darts
    std::vector<std::vector<int>> pos(m, std::vector<int>(2, -1));
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < (int)rot[v].size(); ++i) pos[rot[v][i]][edges[rot[v][i]].first == v ? 0 : 1] = i;
    std::vector<std::vector<int>> face_of(n);
    for (int v = 0; v < n; ++v) face_of[v].assign(rot[v].size(), -1);
    int faces = 0;
    for (int v0 = 0; v0 < n; ++v0)
        for (int i0 = 0; i0 < (int)rot[v0].size(); ++i0) {
            if (face_of[v0][i0] >= 0) continue;
            int v = v0, i = i0;
            while (face_of[v][i] < 0) {
                face_of[v][i] = faces;
                // leave v along rot[v][i+1], arrive at w, angle after that edge there
                int e = rot[v][(i + 1) % rot[v].size()];
                int w = edges[e].first == v ? edges[e].second : edges[e].first;
                int s = edges[e].first == w ? 0 : 1;
                v = w;
                i = pos[e][s];
            }
            ++faces;
        }
    // noose graph: middle vertices + mixed faces linked by switching angles
    std::vector<int> vdeg(n, 0), fdeg(faces, 0);
    std::vector<std::pair<int, int>> links;
    for (int v = 0; v < n; ++v) {
        int d = (int)rot[v].size();
        for (int i = 0; i < d; ++i)
            if (in[rot[v][i]] != in[rot[v][(i + 1) % d]]) {
                ++vdeg[v];
                ++fdeg[face_of[v][i]];
                links.push_back({v, n + face_of[v][i]});
            }
    }
    for (int v = 0; v < n; ++v)
        if (vdeg[v] != 0 && vdeg[v] != 2) return false;
    for (int f = 0; f < faces; ++f)
        if (fdeg[f] != 0 && fdeg[f] != 2) return false;
    if (links.empty()) return false;
    // single cycle
    std::vector<std::vector<int>> g(n + faces);
    for (auto [a, b] : links) g[a].push_back(b), g[b].push_back(a);
    std::vector<char> seen(n + faces, 0);
    std::vector<int> st{links[0].first};
    seen[links[0].first] = 1;
    size_t cnt = 1;
    while (!st.empty()) {
        int x = st.back();
        st.pop_back();
        for (int y : g[x])
            if (!seen[y]) seen[y] = 1, ++cnt, st.push_back(y);
    }
    size_t total = 0;
    for (int v = 0; v < n + faces; ++v) total += !g[v].empty();
    return cnt == total;
}

int SphereCutTree::width() const {
    int w = 0;
    for (auto& nd : nodes) w = std::max(w, (int)nd.middle.size());
    return w;
}

int scd_width(const SphereCutTree& t) { return t.width(); }

namespace {

struct Ctx {
    int n;
    const std::vector<std::pair<int, int>>& edges;
    const RotationSystem& rot;
    std::vector<int> leaves;  // skeleton edges in play
    std::vector<char> as_mask(const std::vector<int>& es) const {
        std::vector<char> in(edges.size(), 0);
        for (int e : es) in[e] = 1;
        return in;
    }
    std::vector<int> mid(const std::vector<int>& es) const { return middle_set(n, edges, as_mask(es)); }
    bool noose(const std::vector<int>& es) const { return is_noose_cut(n, edges, rot, as_mask(es)); }
};

int add_leaf(SphereCutTree& t, const Ctx& c, int e) {
    SphereCutTree::Node nd;
    nd.edge = e;
    nd.edges = {e};
    nd.middle = c.mid(nd.edges);
    t.nodes.push_back(nd);
    return (int)t.nodes.size() - 1;
}

int add_join(SphereCutTree& t, const Ctx& c, int a, int b) {
    SphereCutTree::Node nd;
    nd.left = a;
    nd.right = b;
    nd.edges = t.nodes[a].edges;
    nd.edges.insert(nd.edges.end(), t.nodes[b].edges.begin(), t.nodes[b].edges.end());
    std::sort(nd.edges.begin(), nd.edges.end());
    nd.middle = c.mid(nd.edges);
    t.nodes.push_back(nd);
    return (int)t.nodes.size() - 1;
}

SphereCutTree greedy(const Ctx& c) {
    SphereCutTree t;
    std::vector<int> cl;
    for (int e : c.leaves) cl.push_back(add_leaf(t, c, e));
    while (cl.size() > 1) {
        int bi = -1, bj = -1, best = INT_MAX;
        bool best_noose = false;
        for (size_t i = 0; i < cl.size(); ++i)
            for (size_t j = i + 1; j < cl.size(); ++j) {
                auto& A = t.nodes[cl[i]];
                auto& B = t.nodes[cl[j]];
                std::vector<int> u = A.edges;
                u.insert(u.end(), B.edges.begin(), B.edges.end());
                bool touch = false;
                for (int x : A.middle)
                    touch |= std::binary_search(B.middle.begin(), B.middle.end(), x);
                if (!touch && cl.size() > 2) continue;
                bool nz = cl.size() == 2 || c.noose(u);
                int sz = (int)c.mid(u).size();
                if ((nz && !best_noose) || (nz == best_noose && sz < best)) {
                    best = sz, bi = (int)i, bj = (int)j, best_noose = nz;
                }
            }
        if (bi < 0) bi = 0, bj = 1, best_noose = false;
        if (!best_noose) t.nooses = false;
        int x = add_join(t, c, cl[bi], cl[bj]);
        cl.erase(cl.begin() + bj);
        cl[bi] = x;
    }
    t.root = cl[0];
    return t;
}

// optimal width over noose decompositions, subsets of <= 12 leaves
std::optional<SphereCutTree> exhaustive(const Ctx& c) {
    int k = (int)c.leaves.size();
    if (k > 12) return std::nullopt;
    int full = (1 << k) - 1;
    auto edges_of = [&](int S) {
        std::vector<int> es;
        for (int i = 0; i < k; ++i)
            if (S >> i & 1) es.push_back(c.leaves[i]);
        return es;
    };
    std::vector<int> msz(full + 1, 0), best(full + 1, INT_MAX), split(full + 1, 0);
    std::vector<char> ok(full + 1, 0);
    for (int S = 1; S <= full; ++S) {
        auto es = edges_of(S);
        msz[S] = (int)c.mid(es).size();
        ok[S] = S == full || c.noose(es);
    }
    for (int S = 1; S <= full; ++S) {
        if (!ok[S]) continue;
        if ((S & (S - 1)) == 0) {
            best[S] = msz[S];
            continue;
        }
        int low = S & -S;
        for (int A = (S - 1) & S; A > 0; A = (A - 1) & S) {
            if (!(A & low)) continue;
            int B = S ^ A;
            if (best[A] == INT_MAX || best[B] == INT_MAX) continue;
            int w = std::max({best[A], best[B], msz[S]});
            if (w < best[S]) best[S] = w, split[S] = A;
        }
    }
    if (best[full] == INT_MAX) return std::nullopt;
    SphereCutTree t;
    std::function<int(int)> build = [&](int S) -> int {
        if ((S & (S - 1)) == 0) return add_leaf(t, c, c.leaves[__builtin_ctz(S)]);
        int a = build(split[S]);
        int b = build(S ^ split[S]);
        return add_join(t, c, a, b);
    };
    t.root = build(full);
    return t;
}

}  // namespace

SphereCutTree scd_decompose(int n, const std::vector<std::pair<int, int>>& edges, const RotationSystem& rot,
                            int root_edge, ScdMode mode) {
    if ((int)rot.size() != n) throw std::invalid_argument("rotation system size mismatch");
    Ctx c{n, edges, rot, {}};
    for (int e = 0; e < (int)edges.size(); ++e)
        if (e != root_edge) c.leaves.push_back(e);
    if (c.leaves.empty()) throw std::invalid_argument("no edges to decompose");
    if (mode != ScdMode::Greedy && (mode == ScdMode::Exhaustive || c.leaves.size() <= 10)) {
        if (auto t = exhaustive(c)) return *t;
        if (mode == ScdMode::Exhaustive) throw std::runtime_error("no noose decomposition found");
    }
    return greedy(c);
}

bool scd_valid(int n, const std::vector<std::pair<int, int>>& edges, const RotationSystem& rot, int root_edge,
               const SphereCutTree& t) {
    std::vector<int> seen;
    for (int x = 0; x < (int)t.nodes.size(); ++x) {
        auto& nd = t.nodes[x];
        std::vector<char> in(edges.size(), 0);
        for (int e : nd.edges) in[e] = 1;
        if (nd.middle != middle_set(n, edges, in)) return false;
        if (t.nooses && !is_noose_cut(n, edges, rot, in)) return false;
        if (nd.left < 0) {
            if (nd.edges != std::vector<int>{nd.edge}) return false;
            seen.push_back(nd.edge);
        } else {
            auto u = t.nodes[nd.left].edges;
            u.insert(u.end(), t.nodes[nd.right].edges.begin(), t.nodes[nd.right].edges.end());
            std::sort(u.begin(), u.end());
            if (u != nd.edges) return false;
        }
    }
    std::sort(seen.begin(), seen.end());
    std::vector<int> want;
    for (int e = 0; e < (int)edges.size(); ++e)
        if (e != root_edge) want.push_back(e);
    return seen == want && t.nodes[t.root].edges == want;
}

}  // namespace fpq
