#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fpq {

// Unrooted FPQ-tree. Leaves carry integer labels. The adjacency list of a
// Q- or F-node is its default (clockwise) rotation; for P-nodes the order is
// only cosmetic. Node indices are stable identities: operations that keep a
// node keep its index, new nodes are appended.
//
// Trees over <= 2 leaves are a single P hub holding the leaves.
class Tree {
public:
    enum class Kind : uint8_t { Leaf, P, Q, F };
    struct Node {
        Kind kind = Kind::P;
        int label = -1;
        std::vector<int> adj;
        bool alive = true;
    };

    std::vector<Node> nodes;
    bool null = false;
    int root_hint = -1;

    static Tree null_tree();
    // single internal node over the given leaves, in that rotation
    static Tree star(Kind k, const std::vector<int>& labels);

    int add_node(Kind k, int label = -1);
    void link(int a, int b);
    void replace_adj(int x, int old_nb, int new_nb);

    bool is_leaf(int x) const { return nodes[x].kind == Kind::Leaf; }
    int degree(int x) const { return (int)nodes[x].adj.size(); }
    std::vector<int> leaves() const;  // sorted labels
    int leaf_count() const;
    int leaf_node(int label) const;   // -1 if absent
    std::vector<int> alive_nodes() const;
    std::vector<int> internal_nodes() const;
    int any_internal() const;

    // leaves on y's side of the tree edge {x,y}
    std::vector<int> side(int x, int y) const;

    // debugging check of structural invariants
    void validate() const;
};

using Kind = Tree::Kind;
using Order = std::vector<int>;  // cyclic order of leaf labels

// label <-> name table for text io
struct Labels {
    std::map<std::string, int> id;
    std::vector<std::string> name;
    bool grow = true;
    int get(const std::string& s);
    std::string str(int l) const;
};

Tree parse_tree(const std::string& s, Labels& labels);
std::string to_sexpr(const Tree& t, const Labels* labels = nullptr);
// canonical string: same tree shape with deterministic root and child order
std::string canonical_string(const Tree& t, const Labels* labels = nullptr);

Tree canonicalize(const Tree& t);
// splice out degree-2 nodes, merge adjacent F-nodes; <= 2 leaves become a hub
void normalize(Tree& t);
Tree mirror(const Tree& t);
Tree compact(const Tree& t);  // renumber nodes densely (identities lost)

// orientation per Q/F node id when sigma is represented
std::optional<std::map<int, int>> match(const Tree& t, const Order& sigma);
bool represents(const Tree& t, const Order& sigma);

double count_orders(const Tree& t);
std::vector<Order> enumerate_orders(const Tree& t, double cap = 1e6);
Order normalize_cyclic(const Order& o);
Order first_order(const Tree& t);

// restrict to orders in which s is consecutive; false when empty
bool reduce(Tree& t, const std::vector<int>& s);
// restrict to orders in which a,b,c appear in this cyclic order
bool lock_triple(Tree& t, int a, int b, int c);
Tree intersect(const Tree& t1, const Tree& t2);

bool is_consecutive(const Tree& t, const std::vector<int>& L);

struct Boundary {
    bool is_edge = true;
    int x = -1, y = -1;  // split edge, y on the side of L
    int node = -1;       // boundary Q/F node
    std::vector<int> split_nbrs;  // neighbors of node on the L side
};
Boundary boundary(const Tree& t, const std::vector<int>& L);

// contract the consecutive block into one new leaf; returns the leaf node
int contract_block(Tree& t, const std::vector<int>& block, int label);
Tree project(const Tree& t, const std::vector<int>& L, int ell);
Tree contract_blocks(const Tree& t, const std::vector<std::pair<std::vector<int>, int>>& blocks);

enum class Orientation { Cw = 0, Ccw = 1, Both, None };
Orientation orientation_of(const Tree& t, const std::vector<int>& L, const Order& sigma_prime, int ell);

// median node of three leaves and whether the node's default rotation lists
// their branches as (a,b,c) (0) or (a,c,b) (1)
struct Median {
    int node = -1;
    int ord = 0;
    int na = -1, nb = -1, nc = -1;
};
Median median(const Tree& t, int a, int b, int c);

// blocks partition the leaves, sigma_i over block_i + ell; a represented order extending all of them
std::optional<Order> extension_exists(const Tree& t,
                                      const std::vector<std::pair<std::vector<int>, Order>>& assigned,
                                      int ell);

// leaf-block structure used by the dp: for each Q/F node whose skeleton degree
// is >= 3, three representative leaves of distinct branches in default order
struct Triple {
    int node;
    int a, b, c;
};
std::vector<Triple> orientation_triples(const Tree& t);

}  // namespace fpq
