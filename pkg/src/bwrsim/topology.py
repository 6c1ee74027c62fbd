"""Network topologies: GML / edge-list loading, validation, path queries.

Input links are undirected; each distinct link is materialized as two
directed edges of implicit capacity one data unit per slot. Node ids are
remapped to dense 0-based integers preserving input order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from importlib import resources

BUILTIN_NAMES = ("gscale", "agis", "ans", "cogent")


class GmlParseError(ValueError):
    """Malformed GML input. ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class NoPathError(ValueError):
    """No path exists between the requested endpoints."""


@dataclass(frozen=True)
class Path:
    """Loop-free directed path; edge k's head is edge k+1's tail."""

    nodes: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_nodes(cls, nodes) -> "Path":
        nodes = tuple(nodes)
        if len(nodes) < 2:
            raise ValueError("a path needs at least two nodes")
        if len(set(nodes)) != len(nodes):
            raise ValueError(f"path repeats a node: {nodes}")
        return cls(nodes, tuple(zip(nodes, nodes[1:])))

    @property
    def src(self) -> int:
        return self.nodes[0]

    @property
    def dst(self) -> int:
        return self.nodes[-1]

    @property
    def hops(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Topology:
    """Immutable directed graph derived from undirected unit-capacity links."""

    name: str
    num_nodes: int
    adj: tuple[tuple[int, ...], ...]  # neighbors in ascending id order
    dir_edges: frozenset[tuple[int, int]]
    node_labels: tuple[str, ...]
    dropped_duplicate_links: int = 0
    dropped_self_loops: int = 0

    @classmethod
    def from_links(cls, name, num_nodes, links, labels=None,
                   dropped_duplicate_links=0, dropped_self_loops=0) -> "Topology":
        """Build from distinct undirected links over dense node ids."""
        nbrs = [set() for _ in range(num_nodes)]
        dir_edges = set()
        for u, v in links:
            if u == v:
                raise ValueError(f"self loop on node {u}")
            if not (0 <= u < num_nodes and 0 <= v < num_nodes):
                raise ValueError(f"link ({u},{v}) outside node range 0..{num_nodes - 1}")
            if (u, v) in dir_edges:
                raise ValueError(f"duplicate link ({u},{v})")
            dir_edges.add((u, v))
            dir_edges.add((v, u))
            nbrs[u].add(v)
            nbrs[v].add(u)
        if labels is None:
            labels = tuple(str(i) for i in range(num_nodes))
        return cls(name, num_nodes, tuple(tuple(sorted(s)) for s in nbrs),
                   frozenset(dir_edges), tuple(labels),
                   dropped_duplicate_links, dropped_self_loops)

    @property
    def nodes(self) -> range:
        return range(self.num_nodes)

    @property
    def num_links(self) -> int:
        return len(self.dir_edges) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def components(self) -> list[list[int]]:
        """Connected components as sorted node lists."""
        seen = [False] * self.num_nodes
        comps = []
        for start in range(self.num_nodes):
            if seen[start]:
                continue
            seen[start] = True
            comp = [start]
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for v in self.adj[u]:
                    if not seen[v]:
                        seen[v] = True
                        comp.append(v)
                        queue.append(v)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.num_nodes <= 1 or len(self.components()) == 1


# --- GML subset parser -----------------------------------------------------
#
# Grammar handled: `graph [ node [ id <int> label <str>? ... ]
# edge [ source <int> target <int> ... ] ... ]` with arbitrary unknown keys
# (scalars or nested blocks) skipped, '#' comments, and optional key-value
# pairs before the graph block.

def _scan_gml(text):
    """Yield (kind, value, offset); kinds are '[', ']', 'str', 'atom'."""
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c == "#":
            nl = text.find("\n", i)
            i = n if nl < 0 else nl + 1
        elif c in "[]":
            yield c, c, i
            i += 1
        elif c == '"':
            end = text.find('"', i + 1)
            if end < 0:
                raise GmlParseError("unterminated string", i)
            yield "str", text[i + 1:end], i
            i = end + 1
        else:
            j = i
            while j < n and not text[j].isspace() and text[j] not in '[]"#':
                j += 1
            yield "atom", text[i:j], i
            i = j


class _Cursor:
    def __init__(self, text):
        self.toks = list(_scan_gml(text))
        self.pos = 0
        self.end = len(text)

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise GmlParseError("unexpected end of input", self.end)
        self.pos += 1
        return tok


def _skip_value(cur):
    kind, val, off = cur.take()
    if kind == "[":
        depth = 1
        while depth:
            kind, _, _ = cur.take()
            if kind == "[":
                depth += 1
            elif kind == "]":
                depth -= 1
    elif kind == "]":
        raise GmlParseError("unexpected ']'", off)


def _parse_kv_block(cur, wanted):
    """Consume `[ key value ... ]`; return first occurrence of wanted keys."""
    kind, _, off = cur.take()
    if kind != "[":
        raise GmlParseError("expected '['", off)
    out = {}
    while True:
        kind, val, off = cur.take()
        if kind == "]":
            return out
        if kind != "atom":
            raise GmlParseError(f"expected key, got {val!r}", off)
        if val in wanted and val not in out:
            vkind, vval, voff = cur.take()
            if vkind in ("[", "]"):
                raise GmlParseError(f"scalar value expected for {val!r}", voff)
            out[val] = (vval, voff)
        else:
            _skip_value(cur)


def _int_field(field):
    val, off = field
    try:
        return int(val)
    except ValueError:
        raise GmlParseError(f"expected integer, got {val!r}", off) from None


def parse_gml(text: str, name: str = "gml") -> Topology:
    """Parse a GML graph block into a Topology.

    Each distinct undirected link becomes two directed edges; duplicate
    links and self loops are dropped and counted on the result. Unknown
    keys are skipped. Malformed input raises GmlParseError with the byte
    offset of the fault.
    """
    cur = _Cursor(text)
    while True:  # key-value pairs (Creator, Version, ...) may precede graph
        tok = cur.peek()
        if tok is None:
            raise GmlParseError("no 'graph [' block found", cur.end)
        kind, val, off = cur.take()
        if kind == "atom" and val == "graph":
            break
        if kind != "atom":
            raise GmlParseError(f"expected key, got {val!r}", off)
        _skip_value(cur)

    kind, _, off = cur.take()
    if kind != "[":
        raise GmlParseError("expected '[' after 'graph'", off)

    raw_nodes = []  # (orig_id, label, offset)
    raw_edges = []  # (source, target, offset)
    while True:
        if cur.peek() is None:
            raise GmlParseError("unbalanced brackets: 'graph [' never closed", cur.end)
        kind, val, off = cur.take()
        if kind == "]":
            break
        if kind != "atom":
            raise GmlParseError(f"expected key, got {val!r}", off)
        if val == "node":
            fields = _parse_kv_block(cur, ("id", "label"))
            if "id" not in fields:
                raise GmlParseError("node block without id", off)
            nid = _int_field(fields["id"])
            label = fields["label"][0] if "label" in fields else str(nid)
            raw_nodes.append((nid, label, off))
        elif val == "edge":
            fields = _parse_kv_block(cur, ("source", "target"))
            for key in ("source", "target"):
                if key not in fields:
                    raise GmlParseError(f"edge block without {key}", off)
            raw_edges.append((_int_field(fields["source"]),
                              _int_field(fields["target"]), off))
        else:
            _skip_value(cur)

    id_map = {}
    labels = []
    for orig, label, off in raw_nodes:
        if orig in id_map:
            raise GmlParseError(f"duplicate node id {orig}", off)
        id_map[orig] = len(labels)
        labels.append(label)

    links, seen = [], set()
    dup = loops = 0
    for a, b, off in raw_edges:
        if a not in id_map or b not in id_map:
            missing = a if a not in id_map else b
            raise GmlParseError(f"edge references unknown node {missing}", off)
        u, v = id_map[a], id_map[b]
        if u == v:
            loops += 1
            continue
        key = (u, v) if u < v else (v, u)
        if key in seen:
            dup += 1
            continue
        seen.add(key)
        links.append(key)
    return Topology.from_links(name, len(labels), links, labels, dup, loops)


def parse_edge_list(text: str, name: str = "edges") -> Topology:
    """Parse `u v` link-per-line text ('#' comments) into a Topology."""
    links, seen = [], set()
    dup = loops = 0
    max_id = -1
    for ln, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if len(parts) != 2:
            raise ValueError(f"line {ln}: expected 'u v', got {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if u < 0 or v < 0:
            raise ValueError(f"line {ln}: negative node id")
        max_id = max(max_id, u, v)
        if u == v:
            loops += 1
            continue
        key = (min(u, v), max(u, v))
        if key in seen:
            dup += 1
            continue
        seen.add(key)
        links.append(key)
    return Topology.from_links(name, max_id + 1, links, None, dup, loops)


def builtin_topology(name: str) -> Topology:
    """Load a bundled topology by name (gscale, agis, ans, cogent)."""
    key = name.lower()
    if key not in BUILTIN_NAMES:
        raise ValueError(
            f"unknown topology {name!r}; valid names: {', '.join(BUILTIN_NAMES)}")
    data = resources.files("bwrsim").joinpath("data")
    if key == "gscale":
        return parse_edge_list(data.joinpath("gscale.edges").read_text(), name=key)
    return parse_gml(data.joinpath(f"{key}.gml").read_text(), name=key)


def load_topology(name_or_path: str) -> Topology:
    """Resolve a builtin name or a .gml / edge-list file path."""
    if name_or_path.lower() in BUILTIN_NAMES:
        return builtin_topology(name_or_path)
    import os

    if os.path.exists(name_or_path):
        stem = os.path.splitext(os.path.basename(name_or_path))[0]
        with open(name_or_path) as fh:
            text = fh.read()
        if name_or_path.endswith(".gml"):
            return parse_gml(text, name=stem)
        return parse_edge_list(text, name=stem)
    raise ValueError(
        f"{name_or_path!r} is neither a builtin topology "
        f"({', '.join(BUILTIN_NAMES)}) nor an existing file")


# --- path queries ----------------------------------------------------------

def bfs_levels(adj, root: int) -> list[int]:
    """Hop distance from root to every node; -1 where unreachable."""
    dist = [-1] * len(adj)
    dist[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = du
                queue.append(v)
    return dist


def _check_endpoints(topo, s, t):
    for v in (s, t):
        if not 0 <= v < topo.num_nodes:
            raise ValueError(f"node {v} not in topology {topo.name!r}")
    if s == t:
        raise ValueError("source equals destination")


def min_hop_distance(topo: Topology, s: int, t: int) -> int:
    """Breadth-first shortest hop count from s to t."""
    _check_endpoints(topo, s, t)
    dist = bfs_levels(topo.adj, s)
    if dist[t] < 0:
        raise NoPathError(f"no path from {s} to {t} in {topo.name!r}")
    return dist[t]


def _iter_paths(adj, dist_t, s, t, max_hops):
    """Simple paths s -> t with at most max_hops edges, as node tuples.

    Depth-first with neighbors in ascending id order; prefixes that cannot
    reach t within the remaining hop budget (per dist_t, the hop distance
    to t) are pruned, so enumeration cost tracks the output size.
    """
    if s == t or dist_t[s] < 0 or dist_t[s] > max_hops:
        return
    on_path = bytearray(len(adj))
    on_path[s] = 1
    path = [s]
    stack = [iter(adj[s])]
    while stack:
        for v in stack[-1]:
            if on_path[v]:
                continue
            d = dist_t[v]
            if d < 0 or len(path) + d > max_hops:
                continue
            if v == t:
                yield tuple(path) + (v,)
                continue
            on_path[v] = 1
            path.append(v)
            stack.append(iter(adj[v]))
            break
        else:
            stack.pop()
            on_path[path.pop()] = 0


def enumerate_paths(topo: Topology, s: int, t: int, max_hops: int) -> list[Path]:
    """All simple paths from s to t with at most max_hops edges."""
    _check_endpoints(topo, s, t)
    if max_hops < 1:
        raise ValueError("max_hops must be >= 1")
    dist_t = bfs_levels(topo.adj, t)
    return [Path.from_nodes(nodes)
            for nodes in _iter_paths(topo.adj, dist_t, s, t, max_hops)]
