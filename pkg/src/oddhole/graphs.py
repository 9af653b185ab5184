"""Core graph types and DIMACS/JSON serialization.

Vertices are always 0..n-1.  ``SimpleGraph`` and ``Multigraph`` are immutable
after construction; every operation in the package treats them as values.
"""

from __future__ import annotations

import json

from .errors import DuplicateEdge, ParseError


class SimpleGraph:
    """Undirected simple graph: no loops, no parallel edges.

    ``neighbors[v]`` is a sorted tuple, ``adj[v]`` the matching frozenset.
    """

    __slots__ = ("n", "neighbors", "adj", "m", "_bits")

    def __init__(self, n: int, edges):
        if n < 0:
            raise ParseError(f"negative vertex count {n}")
        seen = set()
        nbrs = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise DuplicateEdge(f"loop at {u} not allowed in a simple graph")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdge(f"edge ({u},{v}) listed twice")
            seen.add(key)
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.n = n
        self.neighbors = tuple(tuple(sorted(a)) for a in nbrs)
        self.adj = tuple(frozenset(a) for a in self.neighbors)
        self.m = len(seen)
        self._bits = None

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def edges(self):
        """Sorted (u, v) pairs with u < v."""
        for u in range(self.n):
            for v in self.neighbors[u]:
                if u < v:
                    yield (u, v)

    def bits(self):
        """Per-vertex neighborhoods as Python-int bitmasks (cached)."""
        if self._bits is None:
            rows = []
            for v in range(self.n):
                mask = 0
                for u in self.neighbors[v]:
                    mask |= 1 << u
                rows.append(mask)
            self._bits = tuple(rows)
        return self._bits

    def induced(self, vertices):
        """Induced subgraph plus the list mapping new ids to old ids."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        edges = []
        for i, v in enumerate(keep):
            for u in self.neighbors[v]:
                j = pos.get(u)
                if j is not None and i < j:
                    edges.append((i, j))
        return SimpleGraph(len(keep), edges), keep

    def complement(self) -> "SimpleGraph":
        edges = [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if v not in self.adj[u]
        ]
        return SimpleGraph(self.n, edges)

    def components(self):
        """Connected components as sorted vertex lists."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            stack = [s]
            while stack:
                v = stack.pop()
                for u in self.neighbors[v]:
                    if not seen[u]:
                        seen[u] = True
                        comp.append(u)
                        stack.append(u)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        return (
            isinstance(other, SimpleGraph)
            and self.n == other.n
            and self.adj == other.adj
        )

    def __hash__(self):
        return hash((self.n, self.adj))


class Multigraph:
    """Vertices plus identified edges; loops and parallel edges allowed.

    Edge ids are dense 0..|E|-1 in listing order.
    """

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges):
        if n < 0:
            raise ParseError(f"negative vertex count {n}")
        named = []
        for eid, pair in enumerate(edges):
            if len(pair) == 3:
                given, a, b = pair
                if given != eid:
                    raise ParseError(f"edge ids must be dense, got {given} at {eid}")
            else:
                a, b = pair
            if not (0 <= a < n and 0 <= b < n):
                raise ParseError(f"edge ({a},{b}) out of range for n={n}")
            named.append((eid, a, b))
        self.n = n
        self.edges = tuple(named)

    @property
    def m(self) -> int:
        return len(self.edges)

    def endpoints(self, eid: int):
        _, a, b = self.edges[eid]
        return a, b

    def incident(self):
        """Edge ids at each vertex; loops appear once."""
        inc = [[] for _ in range(self.n)]
        for eid, a, b in self.edges:
            inc[a].append(eid)
            if b != a:
                inc[b].append(eid)
        return inc

    def is_loop(self, eid: int) -> bool:
        _, a, b = self.edges[eid]
        return a == b

    def __repr__(self):
        return f"Multigraph(n={self.n}, m={self.m})"


class EdgeVertexMap:
    """Bijection between multigraph edge ids and line-graph vertex ids."""

    __slots__ = ("edge_to_vertex", "vertex_to_edge")

    def __init__(self, edge_to_vertex: dict):
        self.edge_to_vertex = dict(edge_to_vertex)
        self.vertex_to_edge = {v: e for e, v in edge_to_vertex.items()}
        if len(self.vertex_to_edge) != len(self.edge_to_vertex):
            raise ValueError("edge/vertex map is not a bijection")


class HoleCertificate:
    """Cyclically ordered vertices of an odd induced cycle of length >= 5."""

    __slots__ = ("vertices",)

    def __init__(self, vertices):
        self.vertices = tuple(vertices)

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return f"HoleCertificate({list(self.vertices)})"

    def __eq__(self, other):
        return isinstance(other, HoleCertificate) and self.vertices == other.vertices

    def validate(self, g: SimpleGraph) -> None:
        """Raise ValueError unless this is an odd induced >=5 cycle of g."""
        vs = self.vertices
        k = len(vs)
        if k < 5 or k % 2 == 0:
            raise ValueError(f"length {k} is not odd and >= 5")
        if len(set(vs)) != k:
            raise ValueError("repeated vertex")
        for i in range(k):
            for j in range(i + 1, k):
                consecutive = (j == i + 1) or (i == 0 and j == k - 1)
                if g.has_edge(vs[i], vs[j]) != consecutive:
                    kind = "missing" if consecutive else "chord"
                    raise ValueError(f"{kind} edge ({vs[i]},{vs[j]})")

    def relabel(self, mapping) -> "HoleCertificate":
        """Apply a vertex relabeling (list or dict lookup)."""
        return HoleCertificate(tuple(mapping[v] for v in self.vertices))


def _parse_dimacs(text: str):
    kind = None
    n = m = 0
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if kind is not None:
                raise ParseError(f"line {lineno}: second problem line")
            if len(parts) != 4 or parts[1] not in ("edge", "multi"):
                raise ParseError(f"line {lineno}: expected 'p edge|multi n m'")
            kind = parts[1]
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"line {lineno}: bad counts") from None
        elif parts[0] == "e":
            if kind is None:
                raise ParseError(f"line {lineno}: edge before problem line")
            # tolerate a trailing weight token, as some DIMACS writers emit
            if len(parts) not in (3, 4):
                raise ParseError(f"line {lineno}: expected 'e u v'")
            try:
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
            except ValueError:
                raise ParseError(f"line {lineno}: bad endpoints") from None
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"line {lineno}: vertex out of range")
            edges.append((u, v))
        else:
            raise ParseError(f"line {lineno}: unknown record {parts[0]!r}")
    if kind is None:
        raise ParseError("no problem line")
    if len(edges) != m:
        raise ParseError(f"header promises {m} edges, found {len(edges)}")
    if kind == "edge":
        return SimpleGraph(n, edges)
    return Multigraph(n, edges)


def _parse_json(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc}") from None
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise ParseError('JSON graph needs "n" and "edges"')
    n = doc["n"]
    edges = [tuple(e) for e in doc["edges"]]
    if any(len(e) != 2 for e in edges):
        raise ParseError("JSON edges must be [u, v] pairs")
    if doc.get("multi", False):
        return Multigraph(n, edges)
    return SimpleGraph(n, edges)


def parse_graph(text: str):
    """Parse a DIMACS-like or JSON graph document.

    DIMACS endpoints are 1-indexed; JSON endpoints are 0-indexed.  Loops
    (``u == v``) are accepted only under ``p multi`` / ``"multi": true``.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_json(text)
    return _parse_dimacs(text)


def serialize_dimacs(g) -> str:
    lines = []
    if isinstance(g, SimpleGraph):
        lines.append(f"p edge {g.n} {g.m}")
        for u, v in g.edges():
            lines.append(f"e {u + 1} {v + 1}")
    else:
        lines.append(f"p multi {g.n} {g.m}")
        for _, a, b in g.edges:
            lines.append(f"e {a + 1} {b + 1}")
    return "\n".join(lines) + "\n"


def serialize_json(g) -> str:
    if isinstance(g, SimpleGraph):
        doc = {"n": g.n, "edges": [list(e) for e in g.edges()], "multi": False}
    else:
        doc = {"n": g.n, "edges": [[a, b] for _, a, b in g.edges], "multi": True}
    return json.dumps(doc)
