#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fpq/choosable.hpp"
#include "fpq/dp.hpp"

namespace fpq {

enum class Side { Top, Right, Bottom, Left, Free };
const char* side_name(Side s);  // T R B L ?

struct NtEnd {
    int cluster = -1;
    int vertex = -1;  // index inside the cluster
    Side side = Side::Free;
};

struct NodeTrixGraph {
    std::vector<std::string> cluster_ids;
    std::vector<std::vector<std::string>> clusters;  // vertex names
    struct InterEdge {
        std::string id;
        NtEnd a, b;
    };
    std::vector<InterEdge> edges;
    std::vector<std::vector<std::pair<int, int>>> intra;  // per cluster, unused by the test

    bool sides_fixed() const;  // no end is Free
    void check() const;
};

// `c <cluster> <vertices...>`, `ie <id> <cluster>.<vertex>.<T|R|B|L|?> <cluster>.<vertex>.<side>`,
// optional `ia <cluster> <u> <v>` for intra-cluster edges
NodeTrixGraph parse_nodetrix(const std::string& text);
std::string format_nodetrix(const NodeTrixGraph& ntg);

// one attachment of an edge (tree leaf label) to a vertex side of the matrix
struct Attachment {
    int label;
    int vertex;
    Side side;
};
// F-node over the positions top 1..k, right 1..k, bottom k..1, left k..1 of the
// matrix whose i-th row/column is vertex pi[i]; several edges at one position
// hang under a P-node, empty positions vanish
Tree matrix_fpq_tree(int cluster_size, const std::vector<Attachment>& att, const std::vector<int>& pi);

// what each tree of D(v) stands for
struct MatrixChoice {
    std::vector<int> pi;
    std::vector<Side> sides;  // per incident end, in the order of NtConstraint::ends[v]
};

struct NtConstraint {
    ChoosableGraph cg;                               // vertex per cluster, edge per inter-cluster edge
    std::vector<std::vector<MatrixChoice>> choice;   // parallel to cg.D
    std::vector<std::vector<std::pair<int, int>>> ends;  // per cluster: (edge, 0 for a / 1 for b)
};

struct NtCaps {
    double max_trees = 2e5;  // per cluster, before dedup
};
struct NtCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// fixed sides: trees over all permutations; free sides: also over all side assignments
NtConstraint constraint_graph(const NodeTrixGraph& ntg, bool free_sides = false, const NtCaps& caps = {});

struct MatrixLayout {
    std::vector<std::vector<int>> perm;  // per cluster: vertex indices, first row/column first
    // per cluster, vertex, side: edge ids in clockwise order along the matrix boundary
    std::vector<std::vector<std::array<std::vector<std::string>, 4>>> attach;
};

struct NtResult {
    Verdict verdict = Verdict::No;
    std::string reason;
    int d_max = 0;  // after dedup
    std::optional<MatrixLayout> layout;
};

NtResult test_fixed_sides(const NodeTrixGraph& ntg, bool want_layout = false);
NtResult test_free_sides(const NodeTrixGraph& ntg, bool want_layout = false, const NtCaps& caps = {});

MatrixLayout layout_from_witness(const NodeTrixGraph& ntg, const NtConstraint& nc, const Witness& w);
// layout respects the sides and, read as rotations around the clusters, is planar
bool layout_valid(const NodeTrixGraph& ntg, const MatrixLayout& lay, bool free_sides = false);

// graph with the chosen tree of every vertex replaced by its gadget: F/Q-nodes
// become wheels, P-nodes single vertices, spokes joined along tree and graph edges
MultiGraph expand_gadget(const ChoosableGraph& cg, const std::vector<int>& assignment);

}  // namespace fpq
