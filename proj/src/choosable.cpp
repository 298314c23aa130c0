#include "fpq/choosable.hpp"

#include <algorithm>
#include <sstream>

namespace fpq {

int ChoosableGraph::d_max() const {
    int m = 0;
    for (auto& d : D) m = std::max(m, (int)d.size());
    return m;
}

void ChoosableGraph::check() const {
    if ((int)D.size() != g.n()) throw std::invalid_argument("tree lists do not cover the vertices");
    for (int v = 0; v < g.n(); ++v) {
        auto inc = g.incident(v);
        std::sort(inc.begin(), inc.end());
        for (auto& t : D[v])
            if (!t.null && t.leaves() != inc)
                throw std::invalid_argument("tree at " + g.name(v) + " does not cover exactly E(v)");
    }
}

Labels edge_labels(const MultiGraph& g) {
    Labels L;
    for (auto& e : g.edges()) L.get(e.id);
    L.grow = false;
    return L;
}

ChoosableGraph parse_choosable(const std::string& text) {
    std::ostringstream graph_part;
    std::vector<std::pair<int, std::string>> dlines;
    std::istringstream is(text);
    std::string line;
    int ln = 0;
    while (std::getline(is, line)) {
        ++ln;
        auto h = line.find('#');
        std::string body = h == std::string::npos ? line : line.substr(0, h);
        auto tok = split_ws(body);
        if (!tok.empty() && tok[0] == "d") {
            dlines.push_back({ln, body});
            graph_part << "\n";
        } else {
            graph_part << body << "\n";
        }
    }
    ChoosableGraph cg;
    cg.g = parse_graph(graph_part.str());
    cg.D.assign(cg.g.n(), {});
    Labels L = edge_labels(cg.g);
    for (auto& [n, body] : dlines) {
        std::istringstream ls(body);
        std::string d, v;
        ls >> d >> v;
        int vi = cg.g.vertex_index(v);
        if (vi < 0) throw ParseError(n, "unknown vertex '" + v + "'");
        std::string rest;
        std::getline(ls, rest);
        try {
            Tree t = parse_tree(rest, L);
            auto inc = cg.g.incident(vi);
            std::sort(inc.begin(), inc.end());
            if (t.leaves() != inc) throw std::invalid_argument("tree leaves differ from the edges at " + v);
            cg.D[vi].push_back(std::move(t));
        } catch (const std::invalid_argument& ex) {
            throw ParseError(n, ex.what());
        }
    }
    for (int v = 0; v < cg.g.n(); ++v)
        if (cg.D[v].empty()) throw ParseError(0, "no tree given for vertex " + cg.g.name(v));
    return cg;
}

std::string format_choosable(const ChoosableGraph& cg) {
    std::ostringstream os;
    os << format_graph(cg.g);
    Labels L = edge_labels(cg.g);
    for (int v = 0; v < cg.g.n(); ++v)
        for (auto& t : cg.D[v]) os << "d " << cg.g.name(v) << " " << to_sexpr(t, &L) << "\n";
    return os.str();
}

}  // namespace fpq
