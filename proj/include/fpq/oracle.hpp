#pragma once

#include <stdexcept>

#include "fpq/dp.hpp"

namespace fpq {

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleCaps {
    double max_combinations = 1e7;  // product of per-vertex candidate rotations
    double max_orders_per_tree = 1e5;
};

// exhaustive: some planar rotation system with every rotation in some tree of D(v)
bool oracle_test(const ChoosableGraph& cg, const OracleCaps& caps = {}, Witness* out = nullptr);

// admissible tuples of G_mu straight from the definition
PsiSet oracle_psi(const ChoosableGraph& cg, const SPQRTree& t, int mu, const OracleCaps& caps = {});

}  // namespace fpq
