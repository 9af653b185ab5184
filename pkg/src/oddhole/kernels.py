"""Hot numeric kernels: all-pairs BFS with two stored first hops, and the
odd-cycle candidate scan over (edge, opposite vertex) pairs.

Kernels are numba-compiled when available; set ODDHOLE_NUMBA=0 to force the
numpy fallback.  Both paths return bit-identical arrays and candidates, so
either may serve as the reference for the other in tests and benchmarks.
"""

from __future__ import annotations

import os

import numpy as np

INF = 1 << 30

_env = os.environ.get("ODDHOLE_NUMBA", "1").strip().lower()
_want = _env not in ("0", "false", "no", "off")

if _want:
    try:
        from numba import njit

        _HAVE_NUMBA = True
    except ImportError:  # pragma: no cover
        _HAVE_NUMBA = False
else:
    _HAVE_NUMBA = False

USE_NUMBA = _HAVE_NUMBA


def using_numba() -> bool:
    return USE_NUMBA and _HAVE_NUMBA


def set_backend(numba_on: bool) -> None:
    """Flip the kernel backend; used by tests and the benchmark."""
    global USE_NUMBA
    USE_NUMBA = bool(numba_on) and _HAVE_NUMBA


def csr_arrays(g):
    """(indptr, indices) with sorted neighbor lists."""
    indptr = np.zeros(g.n + 1, dtype=np.int64)
    for v in range(g.n):
        indptr[v + 1] = indptr[v] + g.degree(v)
    indices = np.empty(indptr[-1], dtype=np.int32)
    at = 0
    for v in range(g.n):
        for u in g.neighbors[v]:
            indices[at] = u
            at += 1
    return indptr, indices


# -- numba path --------------------------------------------------------------

if _HAVE_NUMBA:

    @njit(cache=True)
    def _bfs_all_jit(indptr, indices, n):
        dist = np.full((n, n), INF, dtype=np.int32)
        queue = np.empty(n, dtype=np.int32)
        for s in range(n):
            row = dist[s]
            row[s] = 0
            queue[0] = s
            head, tail = 0, 1
            while head < tail:
                v = queue[head]
                head += 1
                dv = row[v]
                for k in range(indptr[v], indptr[v + 1]):
                    u = indices[k]
                    if row[u] == INF:
                        row[u] = dv + 1
                        queue[tail] = u
                        tail += 1
        return dist

    @njit(cache=True)
    def _two_next_jit(indptr, indices, dist):
        n = dist.shape[0]
        next1 = np.full((n, n), -1, dtype=np.int32)
        next2 = np.full((n, n), -1, dtype=np.int32)
        for u in range(n):
            for k in range(indptr[u], indptr[u + 1]):
                v = indices[k]  # ascending, so stored hops are the smallest
                for w in range(n):
                    if dist[u, w] != INF and dist[v, w] + 1 == dist[u, w]:
                        if next1[u, w] == -1:
                            next1[u, w] = v
                        elif next2[u, w] == -1:
                            next2[u, w] = v
        return next1, next2

    @njit(cache=True)
    def _odd_scan_jit(eu, ev, dist, next1, next2):
        n = dist.shape[0]
        best_d = INF
        best = (-1, -1, -1)
        for i in range(eu.shape[0]):
            v1 = eu[i]
            v2 = ev[i]
            for w in range(n):
                d = dist[v1, w]
                if d < 3 or d >= best_d or dist[v2, w] != d:
                    continue
                a1, a2 = next1[v1, w], next2[v1, w]
                b1, b2 = next1[v2, w], next2[v2, w]
                if a2 == -1 and b2 == -1 and a1 == b1:
                    continue
                best_d = d
                best = (v1, v2, w)
        return best_d, best[0], best[1], best[2]


# -- numpy fallback ----------------------------------------------------------


def _bfs_all_np(g):
    n = g.n
    dist = np.full((n, n), INF, dtype=np.int32)
    adj = np.zeros((n, n), dtype=bool)
    for v in range(n):
        for u in g.neighbors[v]:
            adj[v, u] = True
    reached = np.eye(n, dtype=bool)
    frontier = np.eye(n, dtype=bool)
    np.fill_diagonal(dist, 0)
    level = 0
    while frontier.any():
        level += 1
        nxt = (frontier.astype(np.float32) @ adj.astype(np.float32)) > 0
        nxt &= ~reached
        dist[nxt] = level
        reached |= nxt
        frontier = nxt
    return dist


def _two_next_np(g, dist):
    n = g.n
    next1 = np.full((n, n), -1, dtype=np.int32)
    next2 = np.full((n, n), -1, dtype=np.int32)
    for u in range(n):
        nbrs = np.asarray(g.neighbors[u], dtype=np.int32)
        if nbrs.size == 0:
            continue
        good = (dist[nbrs, :] + 1 == dist[u, :][None, :]) & (dist[u, :] != INF)[None, :]
        has = good.any(axis=0)
        first = good.argmax(axis=0)
        cols = np.nonzero(has)[0]
        next1[u, cols] = nbrs[first[cols]]
        good[first[cols], cols] = False
        has2 = good.any(axis=0)
        second = good.argmax(axis=0)
        cols2 = np.nonzero(has2)[0]
        next2[u, cols2] = nbrs[second[cols2]]
    return next1, next2


def _odd_scan_np(eu, ev, dist, next1, next2):
    best_d = INF
    best = (-1, -1, -1)
    for i in range(eu.shape[0]):
        v1, v2 = int(eu[i]), int(ev[i])
        d1 = dist[v1]
        ok = (d1 >= 3) & (d1 < best_d) & (dist[v2] == d1)
        if not ok.any():
            continue
        a1, a2 = next1[v1], next2[v1]
        b1, b2 = next1[v2], next2[v2]
        ok &= ~((a2 == -1) & (b2 == -1) & (a1 == b1))
        if not ok.any():
            continue
        ws = np.nonzero(ok)[0]
        dmin = int(d1[ws].min())
        if dmin >= best_d:
            continue
        w = int(ws[d1[ws] == dmin][0])
        best_d = dmin
        best = (v1, v2, w)
    return best_d, best[0], best[1], best[2]


# -- dispatch ----------------------------------------------------------------


def bfs_all_pairs(g) -> np.ndarray:
    """Hop-count distance matrix; INF marks unreachable pairs."""
    if using_numba():
        indptr, indices = csr_arrays(g)
        return _bfs_all_jit(indptr, indices, g.n)
    return _bfs_all_np(g)


def two_next(g, dist):
    """For each (u, w): up to two smallest first hops on shortest u-w paths."""
    if using_numba():
        indptr, indices = csr_arrays(g)
        return _two_next_jit(indptr, indices, dist)
    return _two_next_np(g, dist)


def odd_cycle_candidate(g, dist, next1, next2):
    """Best (dist, v1, v2, w) with dist(v1,w)=dist(v2,w)>=3 over edges v1v2
    and at least two distinct stored first hops; None when nothing qualifies.

    Edges are scanned in sorted order and w ascending, so ties resolve
    lexicographically on (dist, v1, v2, w).
    """
    edges = list(g.edges())
    if not edges:
        return None
    eu = np.asarray([e[0] for e in edges], dtype=np.int32)
    ev = np.asarray([e[1] for e in edges], dtype=np.int32)
    if using_numba():
        d, v1, v2, w = _odd_scan_jit(eu, ev, dist, next1, next2)
    else:
        d, v1, v2, w = _odd_scan_np(eu, ev, dist, next1, next2)
    if v1 < 0:
        return None
    return int(d), int(v1), int(v2), int(w)
