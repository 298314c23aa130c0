#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpq {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int ln, const std::string& msg)
        : std::runtime_error("line " + std::to_string(ln) + ": " + msg), line(ln) {}
};

struct Edge {
    std::string id;
    int u = -1, v = -1;
};

// vertices and edges are addressed by dense indices; names kept for io
class MultiGraph {
public:
    MultiGraph() = default;

    int add_vertex(const std::string& name);
    int add_edge(const std::string& id, int u, int v);
    int add_edge(const std::string& id, const std::string& u, const std::string& v);

    int n() const { return (int)names_.size(); }
    int m() const { return (int)edges_.size(); }
    const std::string& name(int v) const { return names_[v]; }
    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& incident(int v) const { return inc_[v]; }
    int degree(int v) const { return (int)inc_[v].size(); }
    int other(int e, int v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }

    int vertex_index(const std::string& name) const;  // -1 when absent
    int edge_index(const std::string& id) const;      // -1 when absent
    bool has_vertex(const std::string& name) const { return vertex_index(name) >= 0; }

private:
    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> inc_;
    std::map<std::string, int> vidx_, eidx_;
};

// (edge id, u, v) triples; vertices created on first use
MultiGraph build_multigraph(const std::vector<std::tuple<std::string, std::string, std::string>>& edge_list);

// rotation[v] = cyclic order of the edges at v. Self-loops are banned so an
// edge index names its end at v unambiguously.
using RotationSystem = std::vector<std::vector<int>>;

bool is_connected(const MultiGraph& g);
bool is_biconnected(const MultiGraph& g);
int trace_faces(const MultiGraph& g, const RotationSystem& rho);
bool is_planar_rotation(const MultiGraph& g, const RotationSystem& rho);

// exhaustive: every rotation system (small graphs only), calls f until it returns false
template <class F>
void for_each_rotation_system(const MultiGraph& g, F&& f);

// graph text format
MultiGraph parse_graph(const std::string& text);
std::string format_graph(const MultiGraph& g);

std::vector<std::string> split_ws(const std::string& line);

}  // namespace fpq

#include <algorithm>
#include <tuple>

namespace fpq {

template <class F>
void for_each_rotation_system(const MultiGraph& g, F&& f) {
    RotationSystem rho(g.n());
    for (int v = 0; v < g.n(); ++v) {
        rho[v] = g.incident(v);
        std::sort(rho[v].begin(), rho[v].end());
    }
    // first element pinned, permute the tail
    int v = 0;
    while (true) {
        if (!f(rho)) return;
        for (v = 0; v < g.n(); ++v) {
            if (rho[v].size() > 2 && std::next_permutation(rho[v].begin() + 1, rho[v].end())) break;
        }
        if (v == g.n()) return;
    }
}

}  // namespace fpq
