"""Routing schemes for arriving flows.

A path's weight is the total remaining volume of the distinct ongoing
flows sharing at least one edge with it. All routers are pure functions of
(topology, flow-index snapshot, request); the primary scheme widens a
hop-bounded exhaustive search one hop at a time until the minimum weight
stops improving, which keeps the new flow's achievable completion time as
small as possible no matter how transmissions get scheduled afterwards.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .topology import NoPathError, Path, bfs_levels, _iter_paths


@dataclass(frozen=True)
class RouteRequest:
    src: int
    dst: int
    volume: int

    def __post_init__(self):
        if self.src == self.dst:
            raise ValueError("source equals destination")
        if self.volume < 1:
            raise ValueError("volume must be >= 1")


@dataclass(frozen=True)
class SearchStats:
    paths_examined: int
    final_k: int  # last hop cap tried by the widening search; 0 elsewhere
    elapsed: float


@dataclass(frozen=True)
class RouteResult:
    path: Path
    weight: int
    hops: int
    stats: SearchStats


class OracleTimeout(RuntimeError):
    """Exact search exceeded its deadline."""


def path_weight(index, path: Path) -> int:
    """Total remaining units over distinct flows sharing an edge with path."""
    seen = set()
    total = 0
    flows = index.flows
    by_edge = index.by_edge
    for e in path.edges:
        for fid in by_edge.get(e, ()):
            if fid not in seen:
                seen.add(fid)
                total += flows[fid].remaining
    return total


def worst_case_completion(index, path: Path, volume: int) -> int:
    """Completion slots if every competing data unit went first."""
    return path_weight(index, path) + volume


def optimality_gap(heuristic_weight: float, optimal_weight: float) -> float:
    """Relative excess of the heuristic path weight over the optimum.

    Zero when both weights are zero; infinite when only the optimum is.
    """
    if optimal_weight < 0:
        raise ValueError("negative optimal weight")
    if heuristic_weight < optimal_weight:
        raise ValueError(
            f"heuristic weight {heuristic_weight} below optimal "
            f"{optimal_weight}: routing bug")
    if optimal_weight == 0:
        return 0.0 if heuristic_weight == 0 else math.inf
    return (heuristic_weight - optimal_weight) / optimal_weight


def _snapshot(index, num_nodes):
    """Flow ids per directed edge (keyed u*n+v) and remaining units per id."""
    edge_flows = {}
    for (u, v), fids in index.by_edge.items():
        if fids:
            edge_flows[u * num_nodes + v] = tuple(sorted(fids))
    if index.flows:
        rem = [0] * (max(index.flows) + 1)
        for fid in index.active:
            rem[fid] = index.flows[fid].remaining
    else:
        rem = []
    return edge_flows, rem


_TIMEOUT_STRIDE = 4096


def _min_weight_search(adj, dist_t, edge_flows, rem, s, t, max_hops,
                       best=None, deadline=None, prune=True):
    """Minimum-weight simple path from s to t with at most max_hops edges.

    Depth-first branch and bound: a prefix's distinct-flow weight never
    decreases as edges are appended, so prefixes strictly heavier than the
    incumbent are abandoned (equal-weight prefixes survive; they may still
    complete with fewer hops). Ties on weight prefer fewer hops, then the
    first path found with neighbors scanned in ascending id order.

    ``best`` seeds the incumbent as (weight, hops, nodes); ``prune=False``
    turns the search into plain exhaustive enumeration. Returns
    (weight, hops, nodes, paths_examined) where nodes is None when nothing
    within the bound beats an absent seed.
    """
    best_w, best_h, best_nodes = best if best is not None else (math.inf, math.inf, None)
    examined = 0
    steps = 0
    n = len(adj)
    counts = {}  # flow id -> number of current-path edges carrying it
    on_path = bytearray(n)
    on_path[s] = 1
    nodes_buf = [s]

    def visit(u, hops, weight):
        nonlocal best_w, best_h, best_nodes, examined, steps
        base = u * n
        for v in adj[u]:
            if on_path[v]:
                continue
            d = dist_t[v]
            if d < 0 or hops + 1 + d > max_hops:
                continue
            steps += 1
            if deadline is not None and steps % _TIMEOUT_STRIDE == 0 \
                    and time.perf_counter() > deadline:
                raise OracleTimeout(f"search past deadline after {steps} expansions")
            new_flows = edge_flows.get(base + v)
            w = weight
            if new_flows:
                for fid in new_flows:
                    c = counts.get(fid, 0)
                    counts[fid] = c + 1
                    if c == 0:
                        w += rem[fid]
            if v == t:
                examined += 1
                h = hops + 1
                if w < best_w or (w == best_w and h < best_h):
                    best_w, best_h, best_nodes = w, h, tuple(nodes_buf) + (t,)
            elif (not prune or w < best_w
                  or (w == best_w and hops + 1 + d < best_h)):
                on_path[v] = 1
                nodes_buf.append(v)
                visit(v, hops + 1, w)
                nodes_buf.pop()
                on_path[v] = 0
            if new_flows:
                for fid in new_flows:
                    c = counts[fid] - 1
                    if c:
                        counts[fid] = c
                    else:
                        del counts[fid]

    visit(s, 0, 0)
    return best_w, best_h, best_nodes, examined


def _reachability(topo, req):
    dist_t = bfs_levels(topo.adj, req.dst)
    if dist_t[req.src] < 0:
        raise NoPathError(f"no path from {req.src} to {req.dst} in {topo.name!r}")
    return dist_t


def route_bwrh(topo, index, req: RouteRequest, rng=None) -> RouteResult:
    """Iterative-deepening minimum-weight routing.

    Starts at the minimum hop count, keeps raising the hop cap by one while
    the best weight within the cap still improves, and stops at the first
    cap that brings no gain, returning the incumbent (minimum weight, then
    minimum hops, then first in enumeration order).
    """
    t0 = time.perf_counter()
    dist_t = _reachability(topo, req)
    edge_flows, rem = _snapshot(index, topo.num_nodes)
    adj = topo.adj
    k = dist_t[req.src]
    w, h, nodes, examined = _min_weight_search(
        adj, dist_t, edge_flows, rem, req.src, req.dst, k)
    total_examined = examined
    while True:
        k += 1
        w2, h2, nodes2, examined = _min_weight_search(
            adj, dist_t, edge_flows, rem, req.src, req.dst, k,
            best=(w, h, nodes))
        total_examined += examined
        if w2 >= w:
            break
        w, h, nodes = w2, h2, nodes2
    return RouteResult(Path.from_nodes(nodes), w, h,
                       SearchStats(total_examined, k, time.perf_counter() - t0))


def route_optimal(topo, index, req: RouteRequest, rng=None, *,
                  timeout=None, raw=False) -> RouteResult:
    """Exact minimum-weight path over all simple paths.

    Branch-and-bound depth-first search; ``raw=True`` disables weight
    pruning (plain exhaustive enumeration, for audits on small graphs).
    ``timeout`` is wall-clock seconds; expiry raises OracleTimeout. With no
    active flows the first minimum-hop path is returned directly, which is
    exactly what the full search would select.
    """
    t0 = time.perf_counter()
    dist_t = _reachability(topo, req)
    if not index.active:
        nodes = next(_iter_paths(topo.adj, dist_t, req.src, req.dst, dist_t[req.src]))
        path = Path.from_nodes(nodes)
        return RouteResult(path, 0, path.hops,
                           SearchStats(1, 0, time.perf_counter() - t0))
    edge_flows, rem = _snapshot(index, topo.num_nodes)
    deadline = None if timeout is None else t0 + timeout
    w, h, nodes, examined = _min_weight_search(
        topo.adj, dist_t, edge_flows, rem, req.src, req.dst,
        topo.num_nodes - 1, deadline=deadline, prune=not raw)
    return RouteResult(Path.from_nodes(nodes), w, h,
                       SearchStats(examined, 0, time.perf_counter() - t0))


def route_min_hop(topo, index, req: RouteRequest, rng=None) -> RouteResult:
    """First minimum-hop path in enumeration order; ignores ongoing flows."""
    t0 = time.perf_counter()
    dist_t = _reachability(topo, req)
    nodes = next(_iter_paths(topo.adj, dist_t, req.src, req.dst, dist_t[req.src]))
    path = Path.from_nodes(nodes)
    return RouteResult(path, path_weight(index, path), path.hops,
                       SearchStats(1, 0, time.perf_counter() - t0))


def _reachable(adj, s, t):
    return bfs_levels(adj, s)[t] >= 0


def route_min_max_util(topo, index, req: RouteRequest, rng=None) -> RouteResult:
    """Exact minimax-bottleneck routing on remaining-load edge utilization.

    Utilization of a directed edge is the summed remaining volume of the
    active flows crossing it. Binary-searches the smallest utilization
    threshold under which the destination stays reachable, then returns the
    first minimum-hop path of the thresholded subgraph in enumeration
    order; that path's bottleneck is exactly the threshold.
    """
    t0 = time.perf_counter()
    _reachability(topo, req)
    n = topo.num_nodes
    util = {e: index.edge_load(e) for e in index.by_edge}

    def allowed_adj(theta):
        return [tuple(v for v in topo.adj[u] if util.get((u, v), 0) <= theta)
                for u in range(n)]

    cands = sorted({0, *util.values()})
    lo, hi = 0, len(cands) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _reachable(allowed_adj(cands[mid]), req.src, req.dst):
            hi = mid
        else:
            lo = mid + 1
    fadj = allowed_adj(cands[lo])
    radj = [[] for _ in range(n)]
    for u in range(n):
        for v in fadj[u]:
            radj[v].append(u)
    dist_t = bfs_levels(radj, req.dst)
    nodes = next(_iter_paths(fadj, dist_t, req.src, req.dst, dist_t[req.src]))
    path = Path.from_nodes(nodes)
    return RouteResult(path, path_weight(index, path), path.hops,
                       SearchStats(1, 0, time.perf_counter() - t0))


def route_random_uniform(topo, index, req: RouteRequest, rng) -> RouteResult:
    """Uniform draw over paths at most one hop longer than the shortest."""
    t0 = time.perf_counter()
    dist_t = _reachability(topo, req)
    cands = list(_iter_paths(topo.adj, dist_t, req.src, req.dst,
                             dist_t[req.src] + 1))
    nodes = cands[int(rng.integers(len(cands)))]
    path = Path.from_nodes(nodes)
    return RouteResult(path, path_weight(index, path), path.hops,
                       SearchStats(len(cands), 0, time.perf_counter() - t0))


SCHEMES = {
    "bwrh": route_bwrh,
    "minhop": route_min_hop,
    "minmax": route_min_max_util,
    "random": route_random_uniform,
}
