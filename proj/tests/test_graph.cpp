#include "doctest.h"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <algorithm>
#include <random>
#include <set>

#include "fpq/graph.hpp"

using namespace fpq;

namespace {

MultiGraph cycle(int n) {
    MultiGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
    for (int i = 0; i < n; ++i) g.add_edge("e" + std::to_string(i), i, (i + 1) % n);
    return g;
}

MultiGraph complete(int n) {
    MultiGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge("e" + std::to_string(k++), i, j);
    return g;
}

// face count written against darts as (edge, vertex) pairs, independent of trace_faces
int faces_slow(const MultiGraph& g, const RotationSystem& rho) {
    std::set<std::pair<int, int>> seen;
    int f = 0;
    for (int v = 0; v < g.n(); ++v)
        for (int e : rho[v]) {
            if (seen.count({e, v})) continue;
            ++f;
            int ce = e, cv = v;
            while (!seen.count({ce, cv})) {
                seen.insert({ce, cv});
                int w = g.other(ce, cv);
                auto& r = rho[w];
                auto it = std::find(r.begin(), r.end(), ce);
                ++it;
                if (it == r.end()) it = r.begin();
                ce = *it;
                cv = w;
            }
        }
    return f;
}

bool boost_planar(const MultiGraph& g) {
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS> b(g.n());
    for (auto& e : g.edges()) boost::add_edge(e.u, e.v, b);
    return boost::boyer_myrvold_planarity_test(b);
}

}  // namespace

TEST_CASE("build_multigraph") {
    auto g = build_multigraph({{"e1", "a", "b"}});
    CHECK(g.n() == 2);
    CHECK(g.m() == 1);
    auto d = build_multigraph({{"e1", "a", "b"}, {"e2", "a", "b"}, {"e3", "a", "b"}});
    CHECK(d.m() == 3);
    CHECK(d.degree(0) == 3);
    CHECK_THROWS_AS(build_multigraph({{"e1", "a", "a"}}), std::invalid_argument);
    CHECK_THROWS_AS(build_multigraph({{"e1", "a", "b"}, {"e1", "b", "c"}}), std::invalid_argument);
    MultiGraph h;
    h.add_vertex("a");
    CHECK_THROWS_AS(h.add_edge("e", "a", "zz"), std::invalid_argument);
}

TEST_CASE("is_biconnected") {
    CHECK(is_biconnected(cycle(4)));
    CHECK_FALSE(is_biconnected(build_multigraph({{"e1", "a", "b"}, {"e2", "b", "c"}})));
    auto bow = build_multigraph(
        {{"e1", "a", "b"}, {"e2", "b", "c"}, {"e3", "c", "a"}, {"e4", "a", "d"}, {"e5", "d", "e"}, {"e6", "e", "a"}});
    CHECK_FALSE(is_biconnected(bow));
    CHECK(is_biconnected(build_multigraph({{"e1", "a", "b"}, {"e2", "a", "b"}})));
    CHECK_FALSE(is_biconnected(build_multigraph({{"e1", "a", "b"}})));
    CHECK(is_biconnected(complete(4)));
}

TEST_CASE("trace_faces") {
    auto tri = cycle(3);
    for_each_rotation_system(tri, [&](const RotationSystem& r) {
        CHECK(trace_faces(tri, r) == 2);
        CHECK(is_planar_rotation(tri, r));
        return true;
    });
    auto k4 = complete(4);
    int planar = 0;
    for_each_rotation_system(k4, [&](const RotationSystem& r) {
        int f = trace_faces(k4, r);
        CHECK(f == faces_slow(k4, r));
        if (f == 4) ++planar;
        return true;
    });
    CHECK(planar == 2);

    auto dip = build_multigraph({{"e1", "a", "b"}, {"e2", "a", "b"}, {"e3", "a", "b"}});
    RotationSystem same{{0, 1, 2}, {0, 1, 2}}, rev{{0, 1, 2}, {2, 1, 0}};
    CHECK(trace_faces(dip, same) == faces_slow(dip, same));
    CHECK(trace_faces(dip, same) == 1);
    CHECK_FALSE(is_planar_rotation(dip, same));
    CHECK(trace_faces(dip, rev) == 3);
    CHECK(is_planar_rotation(dip, rev));

    RotationSystem bad{{0, 1}, {0, 1, 2}};
    CHECK_THROWS_AS(trace_faces(dip, bad), std::invalid_argument);
}

TEST_CASE("K5 has no planar rotation system") {
    auto k5 = complete(5);
    int count = 0, planar = 0;
    for_each_rotation_system(k5, [&](const RotationSystem& r) {
        ++count;
        planar += is_planar_rotation(k5, r);
        return true;
    });
    CHECK(count == 7776);
    CHECK(planar == 0);
}

TEST_CASE("Euler and planarity agreement on random multigraphs") {
    std::mt19937 rng(11);
    for (int it = 0; it < 150; ++it) {
        int n = std::uniform_int_distribution<int>(2, 5)(rng);
        int m = std::uniform_int_distribution<int>(n - 1, 8)(rng);
        MultiGraph g;
        for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
        for (int i = 1; i < n; ++i)
            g.add_edge("t" + std::to_string(i), i, std::uniform_int_distribution<int>(0, i - 1)(rng));
        for (int i = n - 1; i < m; ++i) {
            int a = std::uniform_int_distribution<int>(0, n - 1)(rng);
            int b = std::uniform_int_distribution<int>(0, n - 2)(rng);
            if (b >= a) ++b;
            g.add_edge("x" + std::to_string(i), a, b);
        }
        bool any = false;
        long systems = 0;
        for_each_rotation_system(g, [&](const RotationSystem& r) {
            int f = trace_faces(g, r);
            int chi = g.n() - g.m() + f;
            CHECK(chi <= 2);
            CHECK((2 - chi) % 2 == 0);
            any |= chi == 2;
            return ++systems < 200000;
        });
        if (systems < 200000) CHECK(any == boost_planar(g));
    }
}

TEST_CASE("graph text format") {
    auto g = parse_graph("# k\nv a\nv b\ne x a b\ne y a b # par\n");
    CHECK(g.m() == 2);
    CHECK(parse_graph(format_graph(g)).m() == 2);
    try {
        parse_graph("v a\nv b\ne x a c\n");
        FAIL("no throw");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
    CHECK_THROWS_AS(parse_graph("q\n"), ParseError);
}
