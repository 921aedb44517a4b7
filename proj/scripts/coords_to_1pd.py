#!/usr/bin/env python3
"""Builds golden .1pd drawings from straight-line/polyline coordinates.

Each drawing is given as vertex coordinates plus edges; an edge may carry
intermediate bend points. Crossings are found geometrically, every crossing
becomes a dummy vertex, and rotations are read off by angle (counterclockwise).
"""
import math
import os
import sys


def seg_intersection(p, q, r, s):
    (x1, y1), (x2, y2) = p, q
    (x3, y3), (x4, y4) = r, s
    den = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4)
    if abs(den) < 1e-12:
        return None
    t = ((x1 - x3) * (y3 - y4) - (y1 - y3) * (x3 - x4)) / den
    u = -((x1 - x2) * (y1 - y3) - (y1 - y2) * (x1 - x3)) / den
    eps = 1e-9
    if eps < t < 1 - eps and eps < u < 1 - eps:
        return (x1 + t * (x2 - x1), y1 + t * (y2 - y1)), t
    return None


def build(name, coords, edges, out_dir):
    labels = sorted(coords)
    index = {v: i for i, v in enumerate(labels)}
    n = len(labels)
    # Polyline per edge.
    polys = []
    for e in edges:
        a, b = e[0], e[1]
        bends = e[2] if len(e) > 2 else []
        polys.append([coords[a]] + bends + [coords[b]])
    # Find crossings between polylines.
    hits = {}  # edge index -> list of (param, crossing id, point)
    crossings = []
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            for si in range(len(polys[i]) - 1):
                for sj in range(len(polys[j]) - 1):
                    r = seg_intersection(polys[i][si], polys[i][si + 1], polys[j][sj], polys[j][sj + 1])
                    if r is None:
                        continue
                    pt, _ = r
                    cid = len(crossings)
                    crossings.append((i, j, pt))
                    ti = si + math.dist(polys[i][si], pt) / math.dist(polys[i][si], polys[i][si + 1])
                    tj = sj + math.dist(polys[j][sj], pt) / math.dist(polys[j][sj], polys[j][sj + 1])
                    hits.setdefault(i, []).append((ti, cid))
                    hits.setdefault(j, []).append((tj, cid))
    for k, v in hits.items():
        if len(v) > 1:
            sys.exit(f"{name}: edge {edges[k][:2]} crossed {len(v)} times")
    # Planarization adjacency with the departure direction of each half edge.
    darts = {i: [] for i in range(n + len(crossings))}

    def direction(poly, from_start, pt=None):
        # Direction leaving the start (or end) of the polyline, or leaving a
        # crossing point toward the start/end.
        if pt is None:
            a, b = (poly[0], poly[1]) if from_start else (poly[-1], poly[-2])
        else:
            a, b = pt
        return math.atan2(b[1] - a[1], b[0] - a[0])

    for ei, e in enumerate(edges):
        a, b = index[e[0]], index[e[1]]
        poly = polys[ei]
        if ei not in hits:
            darts[a].append((direction(poly, True), b))
            darts[b].append((direction(poly, False), a))
            continue
        t, cid = hits[ei][0]
        c = n + cid
        pt = crossings[cid][2]
        seg = int(t)
        darts[a].append((direction(poly, True), c))
        darts[b].append((direction(poly, False), c))
        # From the crossing back toward a and forward toward b.
        back = poly[seg]
        fwd = poly[seg + 1]
        darts[c].append((math.atan2(back[1] - pt[1], back[0] - pt[0]), a))
        darts[c].append((math.atan2(fwd[1] - pt[1], fwd[0] - pt[0]), b))
    lines = [f"n {n} c {len(crossings)}"]
    for i, j, _ in crossings:
        ea, eb = edges[i], edges[j]
        lines.append(f"x {index[ea[0]]} {index[ea[1]]} {index[eb[0]]} {index[eb[1]]}")
    for v in range(n + len(crossings)):
        order = [w for _, w in sorted(darts[v])]
        lines.append("r " + str(v) + (" " + " ".join(map(str, order)) if order else ""))
    path = os.path.join(out_dir, name + ".1pd")
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")
    print(path, f"n={n} crossings={len(crossings)}")


def main(out_dir):
    # K_{2,2,2,2}: cube with both diagonals in every face; the two diagonals of
    # the outer face are drawn as bent curves outside the square.
    k2222 = {4: (-2.95, 6), 6: (5.05, 6), 7: (5.05, -2), 5: (-2.95, -2),
             0: (-0.95, 4), 1: (3.05, 4), 3: (3.05, 0), 2: (-0.95, 0)}
    k2222_edges = [(4, 6), (6, 7), (7, 5), (5, 4), (4, 0), (0, 1), (3, 2), (2, 0), (1, 3), (2, 5),
                   (3, 7), (1, 6), (6, 3), (1, 7), (3, 5), (2, 7), (2, 1), (0, 3), (4, 2), (0, 5),
                   (4, 1), (6, 0), (4, 7, [(7.0, 7.0)]), (5, 6, [(-4.0, 7.0)])]
    build("k2222_optimal", k2222, k2222_edges, out_dir)

    # K_{3,3}, two drawings.
    d1 = {74: (-8.025, 8), 75: (-8.025, 1), 76: (-6.525, 4.5), 77: (-1.025, 1), 78: (-1.025, 8), 79: (-2.525, 4.5)}
    d1_edges = [(74, 75), (74, 76), (75, 77), (75, 79), (79, 76), (76, 77), (74, 78), (79, 78), (77, 78)]
    build("k33_drawing_a", d1, d1_edges, out_dir)
    d2 = {15: (2.975, 1), 16: (10.575, 1), 17: (6.775, 7.75), 18: (8.525, 2.25), 19: (6.775, 5.25), 36: (5.35, 2.25)}
    d2_edges = [(19, 15), (19, 16), (17, 18), (15, 18), (16, 18), (19, 17), (17, 36), (36, 15), (36, 16)]
    build("k33_drawing_b", d2, d2_edges, out_dir)

    # K_{2,3}, three drawings (x, y, z on one side; u, v on the other).
    k23_a = {40: (-5.025, -2), 41: (-11.95, -2), 43: (-7.35, 1), 44: (-5, 5), 45: (-12.05, 5)}
    build("k23_planar", k23_a, [(40, 41), (41, 43), (41, 45), (40, 44), (45, 44), (43, 44)], out_dir)
    k23_b = {46: (-1.825, -2.075), 47: (5.775, -2.075), 48: (1.975, 4.675), 49: (3.725, -0.825), 50: (1.975, 2.175)}
    build("k23_one_crossing", k23_b, [(50, 46), (50, 47), (48, 49), (46, 49), (47, 49), (50, 48)], out_dir)
    k23_c = {16: (8.975, 4.6), 17: (14.025, 4.6), 18: (10.075, 2.6), 19: (8.975, -0.4), 20: (14.025, -0.4)}
    build("k23_two_crossings", k23_c,
          [(16, 20), (17, 19), (16, 19), (18, 20, [(8.0, 1.4), (8.5, -1.5), (13.5, -1.5)]), (17, 20), (18, 19)],
          out_dir)

    # P_3∘C_3 as three nested triangles, consecutive triangles fully joined.
    tri = {11: (0.75, 8), 6: (-4.5, -1), 7: (6, -1), 0: (0.75, 6), 1: (-2.65, 0), 2: (4.25, 0),
           3: (0.75, 3.95), 4: (-0.925, 1), 5: (2.45, 1)}
    # Relabel so that vertex 3*level + position matches the lexicographic encoding.
    relabel = {11: 0, 6: 1, 7: 2, 0: 3, 1: 4, 2: 5, 3: 6, 4: 7, 5: 8}
    tri_coords = {relabel[k]: v for k, v in tri.items()}
    raw = [(0, 3), (4, 1), (5, 2), (0, 4), (1, 3), (3, 2), (0, 5), (1, 5), (4, 2), (6, 0), (6, 1), (6, 2),
           (7, 1), (7, 2), (7, 0), (0, 1), (0, 2), (2, 1), (3, 4), (3, 5), (4, 5), (11, 6), (6, 7), (11, 7),
           (11, 1), (11, 2), (11, 0)]
    build("p3_c3_nested", tri_coords, [(relabel[a], relabel[b]) for a, b in raw], out_dir)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "fixtures")
