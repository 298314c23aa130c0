#pragma once

#include <string>
#include <vector>

#include "fpq/fpq_tree.hpp"
#include "fpq/graph.hpp"

namespace fpq {

// G plus, per vertex, a list of FPQ-trees whose leaves are edge indices of E(v)
struct ChoosableGraph {
    MultiGraph g;
    std::vector<std::vector<Tree>> D;

    int d_max() const;
    void check() const;  // ground sets match E(v); throws invalid_argument
};

Labels edge_labels(const MultiGraph& g);

// graph records followed by `d <vertex> <tree>` lines
ChoosableGraph parse_choosable(const std::string& text);
std::string format_choosable(const ChoosableGraph& cg);

}  // namespace fpq
