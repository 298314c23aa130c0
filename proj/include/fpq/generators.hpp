#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fpq/choosable.hpp"

namespace fpq {

// random tree whose default rotation reads `order`; runs split recursively
struct RandomTreeParams {
    double p_kind[3] = {0.4, 0.35, 0.25};  // P, Q, F
    int max_kids = 4;
};
Tree random_tree_over(std::mt19937& rng, const Order& order, const RandomTreeParams& prm = {});

struct RandomParams {
    int n = 5;
    int m = 8;
    int d_max = 2;
    int tree_size = 4;      // max children per internal node
    double p_planar = 0.7;  // chance a vertex keeps a tree over a planar rotation
    bool exact_d = false;   // every vertex gets d_max trees
};
// biconnected planar multigraph with random tree sets
ChoosableGraph gen_random(uint64_t seed, const RandomParams& prm);
// two-terminal series-parallel multigraph with prm.n vertices (prm.m ignored)
ChoosableGraph gen_series_parallel(uint64_t seed, const RandomParams& prm);

// cubic graph drawn with pairwise crossings; pos = index of the crossing along
// the edge walked from its first endpoint
struct Crossing {
    int e1, e2, pos1, pos2;
};
struct DrawnCubicGraph {
    MultiGraph g;
    RotationSystem rot;  // empty when the file has no `r` lines
    std::vector<Crossing> crossings;
};
// graph records, `r <v> <edges...>` (clockwise), `x <e1> <e2> <pos1> <pos2>`
DrawnCubicGraph parse_drawing(const std::string& text);
std::string format_drawing(const DrawnCubicGraph& d);

// each edge becomes 3 (p_only: 6) parallel strands, each crossing a grid of
// degree-4 dummies, each vertex 6 trees, one per color permutation
ChoosableGraph gen_3ec(const DrawnCubicGraph& d, bool p_only = false);

struct ListColoringInstance {
    MultiGraph g;
    std::vector<std::vector<int>> lists;
    RotationSystem rot;  // optional
};
// graph records, `l <v> <colors...>`, optional `r` lines
ListColoringInstance parse_listcol(const std::string& text);
std::string format_listcol(const ListColoringInstance& inst);
ChoosableGraph gen_listcol(const ListColoringInstance& inst, bool p_only = false);

// random biconnected planar simple graph, colors drawn from 1..colors
ListColoringInstance random_listcol(uint64_t seed, int n, int colors);


}  // namespace fpq
