#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fpq/fpq_tree.hpp"
#include "fpq/graph.hpp"

namespace fpq {

struct NotPlanar : std::runtime_error {
    NotPlanar() : std::runtime_error("graph is not planar") {}
};

bool is_planar_graph(const MultiGraph& g);
// some planar rotation system; parallel edges sit next to each other
std::optional<RotationSystem> planar_embedding(const MultiGraph& g);

enum class NodeType { S, P, R, Q };
const char* node_type_name(NodeType t);

struct SkelEdge {
    int a = -1, b = -1;  // vertices of G
    int link = -1;       // tree node on the other side of this edge
};

struct SPQRNode {
    NodeType type = NodeType::Q;
    int parent = -1;
    int parent_edge = -1;       // index into skel of the edge toward the parent
    std::vector<int> children;  // in skeleton-edge order
    int u = -1, v = -1;         // poles
    int edge = -1;              // Q: the real edge
    std::vector<SkelEdge> skel;
    std::vector<int> verts;
    // R: per skeleton vertex (index into verts) the cyclic order of skeleton edges
    std::vector<std::vector<int>> rot;
};

class SPQRTree {
public:
    const MultiGraph* g = nullptr;
    std::vector<SPQRNode> nodes;
    int root = -1;  // Q-node of the lowest edge index

    int root_child() const { return nodes[root].children[0]; }
    // children before parents, root last
    std::vector<int> postorder() const;
    // real edges of the pertinent graph
    const std::vector<int>& pertinent_edges(int mu) const { return pert_[mu]; }
    // E*_mu(x): edges of G_mu at pole x, sorted
    std::vector<int> pertinent_leafset(int mu, int x) const;
    // vertices of G_mu other than the poles
    std::vector<int> inner_vertices(int mu) const;
    // index of the skeleton edge whose link is `nb`
    int skel_edge_to(int mu, int nb) const;

    std::string dump() const;

    std::vector<std::vector<int>> pert_;
};

// g biconnected with >= 2 edges; throws NotPlanar / invalid_argument
SPQRTree decompose(const MultiGraph& g);

Tree embedding_tree(const SPQRTree& t, int v);

}  // namespace fpq
