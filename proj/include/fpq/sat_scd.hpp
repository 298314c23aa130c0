#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fpq/graph.hpp"

namespace fpq {

// literal 2v means x_v = 1, 2v+1 means x_v = 0
inline int lit(int v, bool val) { return 2 * v + (val ? 0 : 1); }
inline int neg(int l) { return l ^ 1; }

struct TwoSatFormula {
    int vars = 0;
    std::vector<std::pair<int, int>> clauses;  // (a or b)

    int add_var() { return vars++; }
    void add_clause(int a, int b) { clauses.push_back({a, b}); }
    void add_unit(int a) { clauses.push_back({a, a}); }
    void add_equal(int a, int b) { add_clause(neg(a), b), add_clause(a, neg(b)); }
};

std::optional<std::vector<char>> twosat_solve(const TwoSatFormula& f);
std::optional<std::vector<char>> twosat_solve_assuming(const TwoSatFormula& f, const std::vector<int>& assumptions);

// Branch decomposition of an embedded skeleton. Leaves are the skeleton edges
// other than `root_edge`; the root covers all of them.
struct SphereCutTree {
    struct Node {
        int left = -1, right = -1;
        int edge = -1;             // leaf: skeleton edge index
        std::vector<int> edges;    // sorted
        std::vector<int> middle;   // sorted vertices shared with the rest
    };
    std::vector<Node> nodes;
    int root = -1;
    bool nooses = true;  // every middle set lies on a noose
    int width() const;
};

// edges between vertex indices 0..n-1, rot[v] = cyclic order of incident edge indices
std::vector<int> middle_set(int n, const std::vector<std::pair<int, int>>& edges, const std::vector<char>& in);
bool is_noose_cut(int n, const std::vector<std::pair<int, int>>& edges, const RotationSystem& rot,
                  const std::vector<char>& in);

enum class ScdMode { Auto, Greedy, Exhaustive };
SphereCutTree scd_decompose(int n, const std::vector<std::pair<int, int>>& edges, const RotationSystem& rot,
                            int root_edge, ScdMode mode = ScdMode::Auto);
int scd_width(const SphereCutTree& t);
bool scd_valid(int n, const std::vector<std::pair<int, int>>& edges, const RotationSystem& rot, int root_edge,
               const SphereCutTree& t);

}  // namespace fpq
