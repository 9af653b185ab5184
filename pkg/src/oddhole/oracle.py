"""Slow exhaustive reference implementations.

These exist to validate the production modules at desk scale and share no
code with them.  Nothing here is expected to be fast.
"""

from __future__ import annotations

from itertools import combinations

from .errors import BudgetExceeded
from .graphs import HoleCertificate, SimpleGraph


def oracle_find_claw(g: SimpleGraph):
    """First claw (center, leaf1, leaf2, leaf3) by exhaustive triple scan."""
    for v in range(g.n):
        nbrs = g.neighbors[v]
        for a, b, c in combinations(nbrs, 3):
            if b not in g.adj[a] and c not in g.adj[a] and c not in g.adj[b]:
                return (v, a, b, c)
    return None


def oracle_alpha_at_most_2(g: SimpleGraph) -> bool:
    """True iff no three vertices are pairwise non-adjacent."""
    for a, b, c in combinations(range(g.n), 3):
        if b not in g.adj[a] and c not in g.adj[a] and c not in g.adj[b]:
            return False
    return True


def oracle_shortest_odd_hole(g: SimpleGraph, limit: int = 24):
    """Minimum-length odd induced cycle of length >= 5, or None.

    DFS over induced paths.  Each cycle is generated exactly once: its least
    vertex is the anchor, and the anchor's smaller cycle-neighbor must appear
    second, which kills the mirrored traversal.
    """
    if g.n > limit:
        raise BudgetExceeded(f"{g.n} vertices exceeds the oracle budget {limit}")
    adj = g.adj
    best: list | None = None

    def extend(anchor, path, blocked):
        nonlocal best
        last = path[-1]
        for w in adj[last]:
            if w <= anchor or w in blocked:
                continue
            if any(w in adj[p] for p in path[1:-1]):
                continue
            if w in adj[anchor]:
                # w closes a cycle; it may not also extend one (chord otherwise)
                k = len(path) + 1
                if (
                    k >= 5
                    and k % 2 == 1
                    and path[1] < w
                    and (best is None or k < len(best))
                ):
                    best = path + [w]
            else:
                if best is not None and len(path) + 2 >= len(best):
                    continue
                path.append(w)
                blocked.add(w)
                extend(anchor, path, blocked)
                path.pop()
                blocked.remove(w)

    for anchor in range(g.n):
        for second in adj[anchor]:
            if second < anchor:
                continue
            extend(anchor, [anchor, second], {anchor, second})
    if best is None:
        return None
    cert = HoleCertificate(best)
    cert.validate(g)
    return cert


def oracle_shortest_odd_cycle_ge5(g: SimpleGraph, limit: int = 14):
    """Length of a minimum odd simple cycle >= 5 (chords allowed), or None.

    DFS over simple paths anchored at the cycle's least vertex, pruned by
    BFS distance back to the anchor and by the best length found so far.
    """
    if g.n > limit:
        raise BudgetExceeded(f"{g.n} vertices exceeds the oracle budget {limit}")
    adj = g.adj
    best = None

    for anchor in range(g.n):
        dist = {anchor: 0}
        frontier = [anchor]
        while frontier:
            nxt = []
            for v in frontier:
                for u in adj[v]:
                    if u > anchor and u not in dist:
                        dist[u] = dist[v] + 1
                        nxt.append(u)
            frontier = nxt

        def extend(path, used):
            nonlocal best
            last = path[-1]
            if len(path) >= 5 and len(path) % 2 == 1 and anchor in adj[last]:
                if path[1] < path[-1] and (best is None or len(path) < best):
                    best = len(path)
            for w in adj[last]:
                if w <= anchor or w in used or w not in dist:
                    continue
                if best is not None and len(path) + dist[w] >= best:
                    continue
                path.append(w)
                used.add(w)
                extend(path, used)
                path.pop()
                used.remove(w)

        for second in adj[anchor]:
            if second > anchor:
                extend([anchor, second], {anchor, second})
    return best


def oracle_spans(strip):
    """All span lengths of a strip, as a sorted multiset (list) of vertex counts.

    A span is an induced path with one endpoint in X, the other in Y, and no
    internal vertex in X or Y.  ``strip`` only needs ``order``, ``x``, ``y``
    and ``g`` attributes; no production span code is reused.
    """
    verts = list(strip.order)
    if len(verts) > 16:
        raise BudgetExceeded(f"{len(verts)} strip vertices exceeds the budget 16")
    vset = set(verts)
    adj = {v: strip.g.adj[v] & vset for v in verts}
    x, y = set(strip.x), set(strip.y)
    lengths = []

    def extend(path, used):
        last = path[-1]
        for w in sorted(adj[last]):
            if w in used:
                continue
            if any(w in adj[p] for p in path[:-1]):
                continue
            if w in y:
                lengths.append(len(path) + 1)
                continue
            if w in x:
                continue
            path.append(w)
            used.add(w)
            extend(path, used)
            path.pop()
            used.remove(w)

    for s in sorted(x):
        if s in y:
            lengths.append(1)
            continue
        extend([s], {s})
    return sorted(lengths)
