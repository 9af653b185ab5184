"""Shortest odd cycle of length >= 5 in a simple graph.

A 5-cycle is found by direct scan.  Failing that, any shortest odd cycle of
length >= 7 decomposes into an edge v1v2 plus two equal-length shortest
paths to an opposite vertex w, so a scan over (edge, w) pairs with the
two-first-hop table finds it; the reconstructed paths are provably disjoint
and the code raises if they are not.
"""

from __future__ import annotations

from . import kernels
from .errors import InternalInconsistency
from .graphs import SimpleGraph


class CycleCertificate:
    """Cyclically ordered distinct vertices; chords allowed, odd length >= 5."""

    __slots__ = ("vertices",)

    def __init__(self, vertices):
        self.vertices = tuple(vertices)

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return f"CycleCertificate({list(self.vertices)})"

    def validate(self, g: SimpleGraph) -> None:
        vs = self.vertices
        k = len(vs)
        if k < 5 or k % 2 == 0:
            raise ValueError(f"length {k} is not odd and >= 5")
        if len(set(vs)) != k:
            raise ValueError("repeated vertex")
        for i in range(k):
            if vs[(i + 1) % k] not in g.adj[vs[i]]:
                raise ValueError(f"missing edge ({vs[i]},{vs[(i + 1) % k]})")


class NextTable:
    """Distances plus up to two first hops per ordered pair."""

    __slots__ = ("dist", "next1", "next2")

    INF = kernels.INF

    def __init__(self, dist, next1, next2):
        self.dist = dist
        self.next1 = next1
        self.next2 = next2

    def next_set(self, u: int, w: int):
        out = []
        a = int(self.next1[u, w])
        if a >= 0:
            out.append(a)
        b = int(self.next2[u, w])
        if b >= 0:
            out.append(b)
        return tuple(out)


def apsp_two_next(h: SimpleGraph) -> NextTable:
    """BFS from every source; stores the two smallest qualifying first hops."""
    dist = kernels.bfs_all_pairs(h)
    next1, next2 = kernels.two_next(h, dist)
    return NextTable(dist, next1, next2)


def find_c5(h: SimpleGraph):
    """Some 5-cycle (chords allowed), or None.

    For each edge (a, b) and each w within two hops of a, a cycle
    a-x-w-y-b-a needs x in N(a)&N(w) and a distinct y in N(b)&N(w).
    """
    for a, b in h.edges():
        ball = set()
        for x in h.neighbors[a]:
            if x != b:
                ball.update(h.adj[x])
        ball.discard(a)
        ball.discard(b)
        for w in sorted(ball):
            xs = (h.adj[a] & h.adj[w]) - {b}
            if not xs:
                continue
            ys = (h.adj[b] & h.adj[w]) - {a}
            if not ys:
                continue
            x = min(xs)
            rest = ys - {x}
            if rest:
                y = min(rest)
            else:
                y = min(ys)  # ys == {x}; move x elsewhere
                xs2 = xs - {y}
                if not xs2:
                    continue
                x = min(xs2)
            return CycleCertificate((a, x, w, y, b))
    return None


def _walk(table: NextTable, start: int, first: int, w: int):
    path = [start, first]
    cur = first
    guard = 0
    while cur != w:
        guard += 1
        if guard > table.dist.shape[0]:
            raise InternalInconsistency("next-hop walk failed to reach target")
        cur = int(table.next1[cur, w])
        if cur < 0:
            raise InternalInconsistency("next-hop walk fell off the table")
        path.append(cur)
    return path


def _reconstruct(h: SimpleGraph, table: NextTable, v1: int, v2: int, w: int):
    n1 = table.next_set(v1, w)
    n2 = table.next_set(v2, w)
    alpha = beta = None
    for a in n1:
        for b in n2:
            if a != b:
                alpha, beta = a, b
                break
        if alpha is not None:
            break
    if alpha is None:
        raise InternalInconsistency("candidate pair lacks two distinct first hops")
    p1 = _walk(table, v1, alpha, w)
    p2 = _walk(table, v2, beta, w)
    if set(p1[1:-1]) & set(p2[1:-1]):
        raise InternalInconsistency("shortest paths intersect internally")
    cycle = p1 + p2[-2::-1]
    cert = CycleCertificate(cycle)
    cert.validate(h)
    return cert


def _component_shortest(h: SimpleGraph):
    c5 = find_c5(h)
    if c5 is not None:
        c5.validate(h)
        return c5
    table = apsp_two_next(h)
    cand = kernels.odd_cycle_candidate(h, table.dist, table.next1, table.next2)
    if cand is None:
        return None
    _, v1, v2, w = cand
    return _reconstruct(h, table, v1, v2, w)


def shortest_odd_cycle_ge5(h: SimpleGraph):
    """Minimum odd cycle of length >= 5 (not necessarily induced), or None."""
    best = None
    for comp in h.components():
        if len(comp) < 5:
            continue
        sub, back = h.induced(comp)
        got = _component_shortest(sub)
        if got is None:
            continue
        lifted = CycleCertificate(tuple(back[v] for v in got.vertices))
        if best is None or len(lifted) < len(best):
            best = lifted
        if len(best) == 5:
            break
    if best is not None:
        best.validate(h)
    return best
