#pragma once
// exhaustive reference implementations used only by tests

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "fpq/fpq_tree.hpp"

namespace brute {

using fpq::Kind;
using fpq::Order;
using fpq::Tree;

inline Order norm(const Order& o) { return fpq::normalize_cyclic(o); }

inline std::vector<Order> all_cyclic(std::vector<int> labels) {
    std::sort(labels.begin(), labels.end());
    std::vector<Order> out;
    if (labels.empty()) return out;
    do out.push_back(labels);
    while (std::next_permutation(labels.begin() + 1, labels.end()));
    return out;
}

// every rotation choice of every node, leaves read off by walking around the tree
inline std::set<Order> consistent(const Tree& t) {
    std::set<Order> out;
    if (t.null) return out;
    auto lv = t.leaves();
    if (lv.size() <= 2) {
        out.insert(lv);
        return out;
    }
    auto in = t.internal_nodes();
    std::vector<std::vector<std::vector<int>>> opts;
    for (int x : in) {
        auto a = t.nodes[x].adj;
        std::vector<std::vector<int>> o;
        if (t.nodes[x].kind == Kind::P) {
            std::sort(a.begin() + 1, a.end());
            do o.push_back(a);
            while (std::next_permutation(a.begin() + 1, a.end()));
        } else {
            o.push_back(a);
            if (t.nodes[x].kind == Kind::Q) {
                std::reverse(a.begin(), a.end());
                o.push_back(a);
            }
        }
        opts.push_back(o);
    }
    std::vector<size_t> idx(in.size(), 0);
    std::vector<std::vector<int>> rot(t.nodes.size());
    for (int x : t.alive_nodes()) rot[x] = t.nodes[x].adj;
    int start = t.leaf_node(lv[0]);
    while (true) {
        for (size_t i = 0; i < in.size(); ++i) rot[in[i]] = opts[i][idx[i]];
        Order o;
        std::function<void(int, int)> walk = [&](int x, int from) {
            if (t.nodes[x].kind == Kind::Leaf) {
                o.push_back(t.nodes[x].label);
                return;
            }
            auto& r = rot[x];
            size_t p = std::find(r.begin(), r.end(), from) - r.begin();
            for (size_t k = 1; k < r.size(); ++k) walk(r[(p + k) % r.size()], x);
        };
        o.push_back(lv[0]);
        walk(t.nodes[start].adj[0], start);
        out.insert(norm(o));
        size_t i = 0;
        for (; i < in.size(); ++i) {
            if (++idx[i] < opts[i].size()) break;
            idx[i] = 0;
        }
        if (i == in.size()) break;
    }
    return out;
}

inline bool cyc_consecutive(const Order& o, const std::vector<int>& L) {
    int n = (int)o.size();
    std::vector<char> m(n);
    for (int i = 0; i < n; ++i) m[i] = std::find(L.begin(), L.end(), o[i]) != L.end();
    int starts = 0;
    for (int i = 0; i < n; ++i) starts += m[i] && !m[(i + n - 1) % n];
    return starts <= 1;
}

// sigma restricted to L with the (consecutive) rest collapsed to ell
inline Order restrict_to(const Order& o, const std::vector<int>& L, int ell) {
    Order r;
    bool put = false;
    for (int x : o) {
        if (std::find(L.begin(), L.end(), x) != L.end()) r.push_back(x);
        else if (!put) r.push_back(ell), put = true;
    }
    return norm(r);
}

inline std::set<Order> restrict_set(const std::set<Order>& s, const std::vector<int>& L, int ell) {
    std::set<Order> r;
    for (auto& o : s) r.insert(restrict_to(o, L, ell));
    return r;
}

inline std::set<Order> as_set(const std::vector<Order>& v) {
    std::set<Order> s;
    for (auto& o : v) s.insert(norm(o));
    return s;
}

inline Order reversed(Order o) {
    std::reverse(o.begin(), o.end());
    return norm(o);
}

}  // namespace brute
