#!/usr/bin/env python3
"""Generate the bundled stand-in WAN topologies (agis, ans, cogent).

The authoritative files for these networks are not redistributable here,
so the bundle carries structurally representative stand-ins that match the
published node and link counts exactly. Construction: a nearest-neighbor
tour over seeded random plane points (a geographic backbone ring, so every
node sits on a cycle) plus chords whose ring spans are drawn log-uniformly,
giving the mix of local triangles and larger redundancy rings typical of
WAN backbones. Rerunning reproduces identical files.

Usage: python tools/make_topologies.py [outdir]
"""

import math
import sys
from pathlib import Path

import numpy as np

TARGETS = {
    # name: (nodes, undirected links, seed)
    "agis": (25, 30, 11),
    "ans": (18, 25, 7),
    "cogent": (197, 243, 23),
}


def nearest_neighbor_tour(pts):
    n = len(pts)
    unvisited = set(range(1, n))
    tour = [0]
    while unvisited:
        u = tour[-1]
        nxt = min(unvisited,
                  key=lambda j: ((pts[u][0] - pts[j][0]) ** 2
                                 + (pts[u][1] - pts[j][1]) ** 2, j))
        unvisited.discard(nxt)
        tour.append(nxt)
    return tour


def build(n, m, seed):
    rng = np.random.default_rng(seed)
    pts = rng.random((n, 2))
    tour = nearest_neighbor_tour(pts.tolist())
    edges = set()
    for i in range(n):
        a, b = tour[i], tour[(i + 1) % n]
        edges.add((min(a, b), max(a, b)))
    extra = m - len(edges)
    if extra < 0:
        raise ValueError("target link count below ring size")
    log_lo, log_hi = math.log(2), math.log(max(3, n // 2))
    while extra > 0:
        pos = int(rng.integers(n))
        span = int(round(math.exp(rng.uniform(log_lo, log_hi))))
        span = max(2, min(span, n - 2))
        a, b = tour[pos], tour[(pos + span) % n]
        key = (min(a, b), max(a, b))
        if a != b and key not in edges:
            edges.add(key)
            extra -= 1
    return sorted(edges)


def to_gml(name, n, edges):
    out = ["graph [", f'  label "{name}"']
    for i in range(n):
        out += ["  node [", f"    id {i}", f'    label "{i}"', "  ]"]
    for u, v in edges:
        out += ["  edge [", f"    source {u}", f"    target {v}", "  ]"]
    out.append("]")
    return "\n".join(out) + "\n"


def stats(n, edges):
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    # BFS diameter and connectivity
    diam = 0
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        queue = [s]
        for u in queue:
            for v in adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        if min(dist) < 0:
            return None
        diam = max(diam, max(dist))
    degs = [len(a) for a in adj]
    return diam, min(degs), max(degs)


def main():
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else (
        Path(__file__).resolve().parent.parent / "src" / "bwrsim" / "data")
    for name, (n, m, seed) in TARGETS.items():
        edges = build(n, m, seed)
        assert len(edges) == m, (name, len(edges))
        info = stats(n, edges)
        assert info is not None, f"{name}: disconnected"
        diam, dmin, dmax = info
        path = outdir / f"{name}.gml"
        path.write_text(to_gml(name, n, edges))
        print(f"{name}: {n} nodes, {m} links, diameter {diam}, "
              f"degree {dmin}..{dmax} -> {path}")


if __name__ == "__main__":
    main()
