#!/usr/bin/env python3
"""Write data/small_biconnected.graphs: biconnected planar multigraphs with at
most 9 edges whose rotation systems can be enumerated (product of (deg-1)!
below a cap). Simple graphs come from the networkx atlas (<= 7 vertices);
multigraphs double one or two edges of them; dipoles are added separately."""
import itertools
import math
import sys

import networkx as nx

MAX_EDGES = 9
CAP = 200_000


def rotations(g):
    return math.prod(math.factorial(d - 1) for _, d in g.degree())


def ok(g):
    if g.number_of_edges() > MAX_EDGES or g.number_of_edges() < 2:
        return False
    simple = nx.Graph(g)
    if simple.number_of_nodes() > 2 and not nx.is_biconnected(simple):
        return False
    if rotations(g) > CAP:
        return False
    return nx.check_planarity(simple)[0]


def main(out):
    found = []

    def add(g):
        if not ok(g):
            return
        for h in found:
            if h.number_of_edges() == g.number_of_edges() and nx.is_isomorphic(h, g):
                return
        found.append(g)

    for k in range(2, 7):
        add(nx.MultiGraph([(0, 1)] * k))
    simple = [g for g in nx.graph_atlas_g() if g.number_of_nodes() >= 3 and ok(nx.MultiGraph(g))]
    for g in simple:
        add(nx.MultiGraph(g))
    for g in simple:
        edges = list(g.edges())
        for r in (1, 2):
            for extra in itertools.combinations_with_replacement(edges, r):
                add(nx.MultiGraph(edges + list(extra)))
    with open(out, "w") as f:
        f.write(f"# {len(found)} graphs, blank line separated\n")
        for g in found:
            f.write("\n")
            for v in sorted(g.nodes()):
                f.write(f"v v{v}\n")
            for i, (a, b) in enumerate(g.edges()):
                f.write(f"e e{i} v{a} v{b}\n")
    print(len(found), "graphs")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/small_biconnected.graphs")
