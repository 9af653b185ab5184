"""Spans of linear interval strips and the circular-graph odd hole search.

A strip is a linear interval graph with end-cliques X (a prefix of the
order) and Y (a suffix).  A span is an induced path with one endpoint in
each end-clique and no internal vertex in either; its length counts
vertices, which is the convention the cycle-weight arithmetic needs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Disconnected, InternalInconsistency
from .graphs import HoleCertificate, SimpleGraph
from .interval import CircularModel


@dataclass(frozen=True)
class Span:
    vertices: tuple

    def __len__(self):
        return len(self.vertices)


class Strip:
    """A strip living inside a host graph; all ids are host vertex ids."""

    __slots__ = ("g", "order", "x", "y", "_pos")

    def __init__(self, g: SimpleGraph, order, x, y):
        self.g = g
        self.order = tuple(order)
        self.x = frozenset(x)
        self.y = frozenset(y)
        self._pos = {v: i for i, v in enumerate(self.order)}

    @property
    def vertices(self):
        return frozenset(self.order)

    def pos(self, v: int) -> int:
        return self._pos[v]

    def strip_neighbors(self, v: int):
        return [u for u in self.g.neighbors[v] if u in self._pos]

    def is_singleton(self) -> bool:
        return len(self.order) == 1 and self.x == self.y == self.vertices

    def validate(self) -> None:
        """Raise ValueError unless this is a well-formed strip."""
        order = self.order
        if not order:
            raise ValueError("empty strip")
        if len(set(order)) != len(order):
            raise ValueError("repeated vertex in strip order")
        verts = self.vertices
        if not self.x or not self.y:
            raise ValueError("end-cliques must be nonempty")
        if not (self.x <= verts and self.y <= verts):
            raise ValueError("end-cliques must lie inside the strip")
        if self.x == self.y == verts:
            if len(order) != 1:
                raise ValueError("X = Y = V only for singleton strips")
            return
        if self.x & self.y:
            raise ValueError("X and Y overlap in a non-singleton strip")
        if set(order[: len(self.x)]) != self.x:
            raise ValueError("X is not the leftmost prefix")
        if set(order[-len(self.y) :]) != self.y:
            raise ValueError("Y is not the rightmost suffix")
        for clique in (self.x, self.y):
            members = sorted(clique)
            for i, a in enumerate(members):
                for b in members[i + 1 :]:
                    if b not in self.g.adj[a]:
                        raise ValueError(f"end-clique pair ({a},{b}) not adjacent")
        # umbrella property restricted to the strip
        for v in order:
            lo = hi = self._pos[v]
            count = 0
            for u in self.strip_neighbors(v):
                count += 1
                p = self._pos[u]
                if p < lo:
                    lo = p
                elif p > hi:
                    hi = p
            if hi - lo != count:
                raise ValueError(f"neighborhood of {v} not contiguous in the order")


def validate_span(strip: Strip, vertices) -> None:
    """Raise ValueError unless vertices form a span of the strip.

    Induced paths in an umbrella order are monotone, so the check is linear:
    strictly monotone positions, consecutive adjacency, and no (i, i+2)
    chord, which rules out all longer chords too.
    """
    seq = tuple(vertices)
    if not seq:
        raise ValueError("empty span")
    if len(seq) == 1:
        if not (seq[0] in strip.x and seq[0] in strip.y):
            raise ValueError("singleton span must lie in X and Y")
        return
    if len(set(seq)) != len(seq):
        raise ValueError("repeated vertex in span")
    if seq[0] not in strip.x:
        raise ValueError("span must start in X")
    if seq[-1] not in strip.y:
        raise ValueError("span must end in Y")
    for v in seq[1:-1]:
        if v in strip.x or v in strip.y:
            raise ValueError("internal span vertex inside an end-clique")
    ps = [strip.pos(v) for v in seq]
    if not all(a < b for a, b in zip(ps, ps[1:])):
        raise ValueError("span positions not increasing")
    g = strip.g
    for a, b in zip(seq, seq[1:]):
        if b not in g.adj[a]:
            raise ValueError(f"span gap ({a},{b})")
    for a, b in zip(seq, seq[2:]):
        if b in g.adj[a]:
            raise ValueError(f"span chord ({a},{b})")


def shortest_span(s: Strip) -> Span:
    """Greedy rightmost walk from the rightmost X vertex; minimum span."""
    if s.is_singleton():
        return Span((s.order[0],))
    p = s.order[len(s.x) - 1]
    path = [p]
    while p not in s.y:
        nbrs = s.strip_neighbors(p)
        if not nbrs:
            raise Disconnected("strip walk stalled")
        q = max(nbrs, key=s.pos)
        if s.pos(q) <= s.pos(p):
            raise Disconnected("strip walk cannot move right")
        path.append(q)
        p = q
    span = Span(tuple(path))
    validate_span(s, span.vertices)
    return span


def _closed_masks(s: Strip):
    """Closed neighborhoods as position bitmasks, with sentinel bits.

    Bit k marks adjacency to the virtual left vertex (everything in X), bit
    k+1 to the virtual right vertex (everything in Y); they stop end-clique
    vertices from being dominated from inside the strip.
    """
    k = len(s.order)
    masks = {}
    for v in s.order:
        m = 1 << s.pos(v)
        for u in s.strip_neighbors(v):
            m |= 1 << s.pos(u)
        if v in s.x:
            m |= 1 << k
        if v in s.y:
            m |= 1 << (k + 1)
        masks[v] = m
    return masks


def longest_span(s: Strip) -> Span:
    """Leftmost admissible walk; maximum-length span.

    Each step takes the leftmost right-neighbor of the last vertex that is
    neither adjacent to the vertex before it nor dominated by it (closed
    neighborhoods, sentinels included).
    """
    if s.x & s.y:
        raise ValueError("longest_span needs disjoint end-cliques")
    masks = _closed_masks(s)
    g = s.g
    path = []
    prev2 = None  # vertex two steps back; None behaves as isolated
    steps = 0
    while not path or path[-1] not in s.y:
        steps += 1
        if steps > len(s.order) + 1:
            raise Disconnected("walk failed to reach Y")
        if not path:
            candidates = sorted(s.x, key=s.pos)
            prev_mask = None  # virtual left vertex
        else:
            prev = path[-1]
            prev_mask = masks[prev]
            candidates = sorted(
                (u for u in s.strip_neighbors(prev) if s.pos(u) > s.pos(prev)),
                key=s.pos,
            )
        chosen = None
        for c in candidates:
            if prev2 == "left":
                if c in s.x:
                    continue  # adjacent to the virtual left vertex
            elif prev2 is not None and c in g.adj[prev2]:
                continue
            if prev_mask is None:
                # dominated by the virtual left vertex: no neighbors beyond X
                x_mask = 1 << len(s.order)
                for u in s.x:
                    x_mask |= 1 << s.pos(u)
                if masks[c] | x_mask == x_mask:
                    continue
            elif masks[c] | prev_mask == prev_mask:
                continue  # dominated
            chosen = c
            break
        if chosen is None:
            raise Disconnected("walk failed to reach Y")
        prev2 = path[-1] if path else "left"
        path.append(chosen)
    span = Span(tuple(path))
    validate_span(s, span.vertices)
    return span


def near_shortest_span(s: Strip):
    """A span one vertex longer than the shortest, or None if all spans tie.

    Obtained by splicing a prefix of the longest span onto a suffix of the
    shortest at the first index where the walks touch compatibly.
    """
    if s.is_singleton():
        return None
    p = shortest_span(s).vertices
    q = longest_span(s).vertices
    k = len(p)
    if len(q) == k:
        return None
    if len(q) == k + 1:
        return Span(q)
    g = s.g
    for i in range(1, k + 1):
        qi = q[i - 1]
        pi = p[i - 1]
        if pi not in g.adj[qi]:
            continue
        if i < k and p[i] in g.adj[qi]:
            continue
        cand = q[:i] + p[i - 1 :]
        try:
            validate_span(s, cand)
        except ValueError:
            continue
        return Span(cand)
    raise InternalInconsistency("a longer span exists but no splice was found")


def shortest_odd_span(s: Strip):
    """Shortest span on an odd number of vertices, or None."""
    p = shortest_span(s)
    if len(p) % 2 == 1:
        return p
    return near_shortest_span(s)


def shortest_odd_hole_circular(g: SimpleGraph, model: CircularModel):
    """Smallest odd hole of a circular interval graph with alpha >= 3.

    For each ordered adjacent pair (x1, xj): drop the common closed
    neighborhood, read the rest clockwise from xj as a strip between
    X = N(xj)-N[x1] and Y = N(x1)-N[xj], and close the shortest odd span
    through the edge.  Both orientations of every edge are tried; invalid
    orientations fail strip validation and are skipped.
    """
    n = g.n
    pos = {v: i for i, v in enumerate(model.order)}
    best = None
    for x1 in range(n):
        for xj in g.neighbors[x1]:
            common = (g.adj[x1] | {x1}) & (g.adj[xj] | {xj})
            s_verts = [v for v in range(n) if v not in common]
            if not s_verts:
                continue
            xset = g.adj[xj] - g.adj[x1] - {x1}
            yset = g.adj[x1] - g.adj[xj] - {xj}
            if not xset or not yset:
                continue
            order = sorted(s_verts, key=lambda v: (pos[v] - pos[xj]) % n)
            strip = Strip(g, order, xset, yset)
            try:
                strip.validate()
            except ValueError:
                continue
            try:
                span = shortest_odd_span(strip)
            except Disconnected:
                continue
            if span is None:
                continue
            hole = HoleCertificate((x1, xj) + span.vertices)
            try:
                hole.validate(g)
            except ValueError as exc:
                raise InternalInconsistency(f"bad circular hole: {exc}") from None
            key = (len(hole), hole.vertices)
            if best is None or key < (len(best), best.vertices):
                best = hole
            if len(best) == 5:
                return best
    return best
