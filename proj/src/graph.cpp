#include "fpq/graph.hpp"

#include <array>
#include <functional>
#include <sstream>

namespace fpq {

int MultiGraph::add_vertex(const std::string& name) {
    auto it = vidx_.find(name);
    if (it != vidx_.end()) return it->second;
    int id = (int)names_.size();
    names_.push_back(name);
    inc_.emplace_back();
    vidx_[name] = id;
    return id;
}

int MultiGraph::add_edge(const std::string& id, int u, int v) {
    if (eidx_.count(id)) throw std::invalid_argument("duplicate edge id " + id);
    if (u < 0 || v < 0 || u >= n() || v >= n()) throw std::invalid_argument("dangling endpoint on " + id);
    if (u == v) throw std::invalid_argument("self-loop " + id);
    int e = (int)edges_.size();
    edges_.push_back({id, u, v});
    inc_[u].push_back(e);
    inc_[v].push_back(e);
    eidx_[id] = e;
    return e;
}

int MultiGraph::add_edge(const std::string& id, const std::string& u, const std::string& v) {
    int a = vertex_index(u), b = vertex_index(v);
    if (a < 0 || b < 0) throw std::invalid_argument("dangling endpoint on " + id);
    return add_edge(id, a, b);
}

int MultiGraph::vertex_index(const std::string& name) const {
    auto it = vidx_.find(name);
    return it == vidx_.end() ? -1 : it->second;
}

int MultiGraph::edge_index(const std::string& id) const {
    auto it = eidx_.find(id);
    return it == eidx_.end() ? -1 : it->second;
}

MultiGraph build_multigraph(const std::vector<std::tuple<std::string, std::string, std::string>>& edge_list) {
    MultiGraph g;
    for (auto& [id, u, v] : edge_list) {
        if (u == v) throw std::invalid_argument("self-loop " + id);
        g.add_vertex(u);
        g.add_vertex(v);
        g.add_edge(id, u, v);
    }
    return g;
}

bool is_connected(const MultiGraph& g) {
    if (g.n() == 0) return true;
    std::vector<char> seen(g.n(), 0);
    std::vector<int> st{0};
    seen[0] = 1;
    int cnt = 1;
    while (!st.empty()) {
        int x = st.back();
        st.pop_back();
        for (int e : g.incident(x)) {
            int y = g.other(e, x);
            if (!seen[y]) seen[y] = 1, ++cnt, st.push_back(y);
        }
    }
    return cnt == g.n();
}

bool is_biconnected(const MultiGraph& g) {
    if (g.n() == 0) throw std::invalid_argument("empty graph");
    if (g.n() == 1) return false;
    if (!is_connected(g)) return false;
    if (g.n() == 2) return g.m() >= 2;
    // articulation points by lowpoint
    int n = g.n();
    std::vector<int> disc(n, -1), low(n, 0);
    int t = 0;
    bool cut = false;
    std::function<void(int, int)> dfs = [&](int x, int pe) {
        disc[x] = low[x] = t++;
        int kids = 0;
        for (int e : g.incident(x)) {
            if (e == pe) continue;
            int y = g.other(e, x);
            if (disc[y] < 0) {
                ++kids;
                dfs(y, e);
                low[x] = std::min(low[x], low[y]);
                if (pe >= 0 && low[y] >= disc[x]) cut = true;
            } else {
                low[x] = std::min(low[x], disc[y]);
            }
        }
        if (pe < 0 && kids > 1) cut = true;
    };
    dfs(0, -1);
    return !cut;
}

int trace_faces(const MultiGraph& g, const RotationSystem& rho) {
    if ((int)rho.size() != g.n()) throw std::invalid_argument("rotation system incomplete");
    // position of edge e inside rho[v]
    std::vector<std::array<int, 2>> pos(g.m(), {-1, -1});
    for (int v = 0; v < g.n(); ++v) {
        if (rho[v].size() != g.incident(v).size()) throw std::invalid_argument("rotation system incomplete");
        for (int i = 0; i < (int)rho[v].size(); ++i) {
            int e = rho[v][i];
            if (e < 0 || e >= g.m()) throw std::invalid_argument("rotation system incomplete");
            int side = g.edge(e).u == v ? 0 : 1;
            if ((side == 0 && g.edge(e).u != v) || (side == 1 && g.edge(e).v != v))
                throw std::invalid_argument("rotation system incomplete");
            if (pos[e][side] >= 0) throw std::invalid_argument("rotation system repeats an edge");
            pos[e][side] = i;
        }
    }
    // dart 2e+s sits at endpoint s of e; next dart = successor of twin at its vertex
    std::vector<char> seen(2 * g.m(), 0);
    int faces = 0;
    for (int d0 = 0; d0 < 2 * g.m(); ++d0) {
        if (seen[d0]) continue;
        ++faces;
        int d = d0;
        while (!seen[d]) {
            seen[d] = 1;
            int e = d >> 1, s = d & 1;
            int tw = s ^ 1;
            int w = tw == 0 ? g.edge(e).u : g.edge(e).v;
            const auto& r = rho[w];
            int e2 = r[(pos[e][tw] + 1) % r.size()];
            int s2 = g.edge(e2).u == w ? 0 : 1;
            d = 2 * e2 + s2;
        }
    }
    return faces;
}

bool is_planar_rotation(const MultiGraph& g, const RotationSystem& rho) {
    if (!is_connected(g)) throw std::invalid_argument("graph not connected");
    return g.n() - g.m() + trace_faces(g, rho) == 2;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

MultiGraph parse_graph(const std::string& text) {
    MultiGraph g;
    std::istringstream is(text);
    std::string line;
    int ln = 0;
    while (std::getline(is, line)) {
        ++ln;
        auto h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        auto tok = split_ws(line);
        if (tok.empty()) continue;
        try {
            if (tok[0] == "v" && tok.size() == 2) {
                g.add_vertex(tok[1]);
            } else if (tok[0] == "e" && tok.size() == 4) {
                g.add_edge(tok[1], tok[2], tok[3]);
            } else {
                throw std::invalid_argument("bad record '" + tok[0] + "'");
            }
        } catch (const std::invalid_argument& ex) {
            throw ParseError(ln, ex.what());
        }
    }
    return g;
}

std::string format_graph(const MultiGraph& g) {
    std::ostringstream os;
    for (int v = 0; v < g.n(); ++v) os << "v " << g.name(v) << "\n";
    for (auto& e : g.edges()) os << "e " << e.id << " " << g.name(e.u) << " " << g.name(e.v) << "\n";
    return os.str();
}

}  // namespace fpq
