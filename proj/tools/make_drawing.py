#!/usr/bin/env python3
"""Write a drawing file (graph, clockwise rotations, crossings) from straight-line coordinates."""
import math
import sys


def seg_cross(p, q, r, s):
    def orient(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    d1, d2 = orient(p, q, r), orient(p, q, s)
    d3, d4 = orient(r, s, p), orient(r, s, q)
    if d1 * d2 < 0 and d3 * d4 < 0:
        t = d3 / (d3 - d4)
        return t
    return None


def drawing(pos, edges):
    out = [f"v {v}" for v in pos]
    out += [f"e {e} {a} {b}" for e, a, b in edges]
    for v, (x, y) in pos.items():
        inc = []
        for e, a, b in edges:
            if v in (a, b):
                w = b if a == v else a
                ang = math.atan2(pos[w][1] - y, pos[w][0] - x)
                inc.append((-ang, e))
        inc.sort()
        out.append(f"r {v} " + " ".join(e for _, e in inc))
    xs = []
    for i, (e, a, b) in enumerate(edges):
        for f, c, d in edges[i + 1:]:
            if len({a, b, c, d}) < 4:
                continue
            t = seg_cross(pos[a], pos[b], pos[c], pos[d])
            if t is not None:
                u = seg_cross(pos[c], pos[d], pos[a], pos[b])
                xs.append([e, f, t, u])
    for i, (e, a, b) in enumerate(edges):
        on = sorted([x for x in xs if e in (x[0], x[1])], key=lambda x: x[2] if x[0] == e else x[3])
        for k, x in enumerate(on):
            x.append((e, k))
    for x in xs:
        p = dict(x[4:])
        out.append(f"x {x[0]} {x[1]} {p[x[0]]} {p[x[1]]}")
    return "\n".join(out) + "\n"


def ring(names, r, phase=90.0):
    n = len(names)
    return {v: (r * math.cos(math.radians(phase + 360 * i / n)), r * math.sin(math.radians(phase + 360 * i / n)))
            for i, v in enumerate(names)}


if __name__ == "__main__":
    which = sys.argv[1]
    if which == "k4":
        pos = {"a": (0, 3), "b": (-3, -2), "c": (3, -2), "d": (0, 0)}
        edges = [("ab", "a", "b"), ("ac", "a", "c"), ("ad", "a", "d"), ("bc", "b", "c"), ("bd", "b", "d"), ("cd", "c", "d")]
    elif which == "petersen":
        pos = ring([f"o{i}" for i in range(5)], 2.0)
        pos.update(ring([f"i{i}" for i in range(5)], 1.0))
        edges = [(f"o{i}o{(i + 1) % 5}", f"o{i}", f"o{(i + 1) % 5}") for i in range(5)]
        edges += [(f"s{i}", f"o{i}", f"i{i}") for i in range(5)]
        edges += [(f"i{i}i{(i + 2) % 5}", f"i{i}", f"i{(i + 2) % 5}") for i in range(5)]
    elif which == "k33":
        import random
        rng = random.Random(3)
        edges = [(f"a{i}b{j}", f"a{i}", f"b{j}") for i in range(3) for j in range(3)]
        while True:
            pos = {v: (rng.randint(0, 20), rng.randint(0, 20)) for v in ["a0", "a1", "a2", "b0", "b1", "b2"]}
            if drawing(pos, edges).count("\nx ") == 1:
                break
    else:
        sys.exit("usage: make_drawing.py k4|petersen|k33")
    sys.stdout.write(drawing(pos, edges))
