"""Shared test utilities: isomorphism, small-graph enumeration, slow checks."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

import numpy as np

from oddhole.graphs import SimpleGraph


def degree_signature(g: SimpleGraph):
    return tuple(
        sorted(
            (g.degree(v), tuple(sorted(g.degree(u) for u in g.neighbors[v])))
            for v in range(g.n)
        )
    )


def are_isomorphic(g1: SimpleGraph, g2: SimpleGraph) -> bool:
    """Backtracking isomorphism test for small graphs (<= 16 vertices)."""
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if degree_signature(g1) != degree_signature(g2):
        return False
    n = g1.n
    order = sorted(range(n), key=lambda v: (-g1.degree(v), v))
    mapping = [-1] * n
    used = [False] * n

    def place(idx):
        if idx == n:
            return True
        v = order[idx]
        for w in range(n):
            if used[w] or g1.degree(v) != g2.degree(w):
                continue
            ok = True
            for p in order[:idx]:
                if (p in g1.adj[v]) != (mapping[p] in g2.adj[w]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if place(idx + 1):
                return True
            mapping[v] = -1
            used[w] = False
        return False

    return place(0)


def _invariant(g: SimpleGraph):
    triangles = 0
    for u, v in g.edges():
        triangles += len(g.adj[u] & g.adj[v])
    return (g.n, g.m, degree_signature(g), triangles // 3)


@lru_cache(maxsize=None)
def connected_graphs_up_to(max_n: int):
    """One representative per isomorphism class of connected graphs <= max_n.

    Built by attaching a new vertex to every smaller representative in all
    ways, deduplicating by invariant buckets plus exact isomorphism.
    """
    levels = {1: [SimpleGraph(1, [])]}
    for k in range(2, max_n + 1):
        buckets = {}
        for base in levels[k - 1]:
            base_edges = list(base.edges())
            for mask in range(1, 1 << (k - 1)):
                edges = base_edges + [
                    (v, k - 1) for v in range(k - 1) if mask >> v & 1
                ]
                g = SimpleGraph(k, edges)
                key = _invariant(g)
                reps = buckets.setdefault(key, [])
                if not any(are_isomorphic(g, r) for r in reps):
                    reps.append(g)
        levels[k] = [g for reps in buckets.values() for g in reps]
    return levels


def floyd_warshall(g: SimpleGraph, inf: int):
    n = g.n
    dist = np.full((n, n), inf, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    for u, v in g.edges():
        dist[u, v] = dist[v, u] = 1
    for k in range(n):
        dist = np.minimum(dist, dist[:, k, None] + dist[None, k, :])
    return np.minimum(dist, inf)


def naive_claw_4subsets(g: SimpleGraph):
    """Claw detection by scanning every 4-subset; cross-checks the oracle."""
    for quad in combinations(range(g.n), 4):
        for center in quad:
            leaves = [v for v in quad if v != center]
            if all(v in g.adj[center] for v in leaves) and all(
                b not in g.adj[a] for a, b in combinations(leaves, 2)
            ):
                return (center, *leaves)
    return None


def induced_c5_exists(g: SimpleGraph) -> bool:
    """Exhaustive scan of 5-subsets for an induced C5."""
    for sub in combinations(range(g.n), 5):
        degs = []
        ok = True
        for v in sub:
            d = len(g.adj[v] & set(sub))
            if d != 2:
                ok = False
                break
            degs.append(d)
        if not ok:
            continue
        # all degrees 2: the subset induces a C5 or C3+K2; the latter has
        # a vertex pair at distance > 2 inside, so check connectivity
        subg, _ = g.induced(sub)
        if subg.is_connected():
            return True
    return False
