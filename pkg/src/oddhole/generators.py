"""Deterministic test-instance generators and a small library of named graphs.

All randomness flows through ``random.Random`` seeded with a string built
from the arguments, so outputs are stable across runs and platforms.
"""

from __future__ import annotations

import random

from .decomposition import StripDecomposition
from .errors import GenerationExhausted
from .graphs import Multigraph, SimpleGraph
from .linegraph import line_graph
from .strips import Strip


# -- named graphs -----------------------------------------------------------


def cycle(n: int) -> SimpleGraph:
    return SimpleGraph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> SimpleGraph:
    return SimpleGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def circulant(n: int, steps) -> SimpleGraph:
    edges = set()
    for i in range(n):
        for s in steps:
            a, b = i, (i + s) % n
            if a != b:
                edges.add((min(a, b), max(a, b)))
    return SimpleGraph(n, sorted(edges))


def claw() -> SimpleGraph:
    return SimpleGraph(4, [(0, 1), (0, 2), (0, 3)])


def petersen() -> SimpleGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return SimpleGraph(10, outer + spokes + inner)


def icosahedron() -> SimpleGraph:
    """Two apexes over a pentagonal antiprism; every neighborhood is a C5."""
    edges = []
    for i in range(5):
        u, l = 1 + i, 6 + i
        edges.append((0, u))
        edges.append((11, l))
        edges.append((u, 1 + (i + 1) % 5))
        edges.append((l, 6 + (i + 1) % 5))
        edges.append((u, l))
        edges.append((u, 6 + (i + 1) % 5))
    return SimpleGraph(12, edges)


# -- random building blocks -------------------------------------------------


def _rng(seed, *tags) -> random.Random:
    return random.Random(":".join(str(t) for t in (seed, *tags)))


def random_multigraph(rng: random.Random, n_edges: int, allow_loops: bool = True) -> Multigraph:
    n = max(2, rng.randint(max(2, n_edges // 3), max(2, (2 * n_edges) // 3 + 1)))
    edges = []
    for _ in range(n_edges):
        a = rng.randrange(n)
        if allow_loops and rng.random() < 0.08:
            edges.append((a, a))
        else:
            b = rng.randrange(n)
            while b == a:
                b = rng.randrange(n)
            edges.append((a, b))
    return Multigraph(n, edges)


def random_cubic(rng: random.Random, n: int) -> Multigraph:
    """Connected simple 3-regular multigraph on n vertices (n even)."""
    if n % 2 or n < 4:
        raise ValueError("cubic graphs need an even vertex count >= 4")
    for _ in range(2000):
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            a, b = stubs[i], stubs[i + 1]
            if a == b:
                ok = False
                break
            key = (min(a, b), max(a, b))
            if key in edges:
                ok = False
                break
            edges.add(key)
        if not ok:
            continue
        g = SimpleGraph(n, sorted(edges))
        if g.is_connected():
            return Multigraph(n, sorted(edges))
    raise GenerationExhausted("no connected cubic graph found within the retry budget")


def random_strip_reaches(rng: random.Random, k: int):
    """Non-decreasing right-reaches defining a connected proper interval graph."""
    reaches = []
    b = 1
    for i in range(k - 1):
        b = max(b, i + 1)
        while b < k - 1 and rng.random() < 0.4:
            b += 1
        reaches.append(b)
    reaches.append(k - 1)
    return reaches


def random_strip(seed, k: int, need_interior: bool = False):
    """A random strip on k vertices (order 0..k-1) with chosen end-cliques.

    Returns (graph, strip).  With ``need_interior`` the end-cliques leave at
    least one ordinary vertex between them, and the strip is never a clique.
    """
    rng = _rng(seed, "strip", k)
    if k == 1:
        g = SimpleGraph(1, [])
        return g, Strip(g, (0,), {0}, {0})
    for _ in range(200):
        reaches = random_strip_reaches(rng, k)
        if reaches[0] == k - 1:
            reaches[0] = max(1, k - 2)  # keep the strip from being a clique
            reaches = sorted(reaches)
        edges = [(i, j) for i in range(k) for j in range(i + 1, reaches[i] + 1)]
        g = SimpleGraph(k, edges)
        x_size = rng.randint(1, max(1, min(reaches[0], k - 2)))
        y_starts = [z for z in range(x_size, k) if reaches[z] == k - 1 or z == k - 1]
        if need_interior:
            y_starts = [z for z in y_starts if z >= x_size + 1]
        if not y_starts:
            continue
        y_start = rng.choice(y_starts)
        strip = Strip(g, tuple(range(k)), set(range(x_size)), set(range(y_start, k)))
        try:
            strip.validate()
        except ValueError:
            continue
        return g, strip
    raise GenerationExhausted(f"no usable strip of size {k}")


def compose_strips(n_h: int, h_edges, locals_):
    """Compose local strips over an oriented multigraph.

    ``h_edges`` is a list of (tail, head); ``locals_`` the matching list of
    (graph, strip) pairs with strip vertices 0..k-1.  Returns the composed
    graph and its ground-truth decomposition.
    """
    offsets = []
    total = 0
    for g_local, _ in locals_:
        offsets.append(total)
        total += g_local.n
    edges = set()
    for (g_local, _), off in zip(locals_, offsets):
        for u, v in g_local.edges():
            edges.add((u + off, v + off))
    hubs = {v: set() for v in range(n_h)}
    for (tail, head), (g_local, strip), off in zip(h_edges, locals_, offsets):
        hubs[tail] |= {u + off for u in strip.x}
        hubs[head] |= {u + off for u in strip.y}
    for members in hubs.values():
        ms = sorted(members)
        for i, a in enumerate(ms):
            for b in ms[i + 1 :]:
                edges.add((a, b))
    g = SimpleGraph(total, sorted(edges))
    strips = {}
    for eid, ((tail, head), (g_local, strip), off) in enumerate(
        zip(h_edges, locals_, offsets)
    ):
        strips[eid] = Strip(
            g,
            tuple(u + off for u in strip.order),
            {u + off for u in strip.x},
            {u + off for u in strip.y},
        )
    d = StripDecomposition(Multigraph(n_h, list(h_edges)), strips)
    return g, d


def random_composition(seed, n: int, allow_loops: bool = False):
    """Random strip composition with about n vertices; ground truth included.

    Strips are singletons or interval strips with interior vertices, sizes
    drawn until they partition n exactly.
    """
    rng = _rng(seed, "compose", n)
    for attempt in range(300):
        sizes = []
        remaining = n
        while remaining > 0:
            if remaining in (1, 2) or (remaining < 5 and rng.random() < 0.5):
                take = 1
            elif rng.random() < 0.45:
                take = 1
            else:
                hi = min(8, remaining)
                if hi < 3:
                    take = 1
                else:
                    take = rng.randint(3, hi)
                    if remaining - take in (1, 2) and remaining - take != 0:
                        take = 1 if rng.random() < 0.5 else take
            if remaining - take in (1, 2) and remaining - take != 0 and take != 1:
                continue
            sizes.append(take)
            remaining -= take
        m_h = len(sizes)
        n_h = rng.randint(max(2, (m_h + 1) // 2), m_h + 1)
        h_edges = []
        for _ in range(m_h):
            a = rng.randrange(n_h)
            if allow_loops and rng.random() < 0.1:
                h_edges.append((a, a))
                continue
            b = rng.randrange(n_h)
            while b == a:
                b = rng.randrange(n_h)
            h_edges.append((a, b))
        try:
            locals_ = [
                random_strip((seed, attempt, i), k, need_interior=k > 1)
                for i, k in enumerate(sizes)
            ]
        except GenerationExhausted:
            continue
        return compose_strips(n_h, h_edges, locals_)
    raise GenerationExhausted(f"no composition of size {n}")


def plant_thickening(seed, n: int):
    """Quasi-line graph on n vertices containing a nonlinear homogeneous pair.

    Cliques A = {a1, a2} and B = {b1, b2}, joined by a perfect matching so
    the four vertices induce a C4, are attached complete to two hub cliques
    of a random composition.  Every vertex stays bisimplicial.
    """
    rng = _rng(seed, "plant", n)
    base, d = random_composition((seed, "plantbase"), n - 4)
    hubs = d.hub_cliques()
    hub_ids = sorted(hubs)
    u = rng.choice(hub_ids)
    v = rng.choice([z for z in hub_ids if z != u])
    a1, a2, b1, b2 = base.n, base.n + 1, base.n + 2, base.n + 3
    edges = list(base.edges())
    edges += [(a1, a2), (b1, b2), (a1, b1), (a2, b2)]
    edges += [(z, w) for z in sorted(hubs[u]) for w in (a1, a2)]
    edges += [(z, w) for z in sorted(hubs[v]) for w in (b1, b2)]
    return SimpleGraph(base.n + 4, edges), (a1, a2, b1, b2)


def random_circular(seed, n: int):
    """Random circular interval graph; the generating model is returned too.

    Vertices sit at circle positions 0..n-1 and each carries one clockwise
    arc, so the identity order with these arcs is a valid model by
    construction.
    """
    rng = _rng(seed, "circular", n)
    arcs = []
    edges = set()
    for i in range(n):
        width = rng.randint(1, max(1, n // 3))
        arcs.append((i, (i + width) % n))
        for a in range(width + 1):
            for b in range(a + 1, width + 1):
                u, v = (i + a) % n, (i + b) % n
                if u != v:
                    edges.add((min(u, v), max(u, v)))
    return SimpleGraph(n, sorted(edges)), tuple(arcs)


def random_graph(rng: random.Random, n: int, p: float) -> SimpleGraph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return SimpleGraph(n, edges)


def gen_clawfree(seed, n: int, mode: str) -> SimpleGraph:
    """Deterministic claw-free instance; modes line, quasiline, reject."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = _rng(seed, "gen", n, mode)
    if mode == "line":
        h = random_multigraph(rng, n)
        g, _ = line_graph(h)
        return g
    if mode == "quasiline":
        g, _ = random_composition((seed, "gen"), n)
        return g
    if mode == "reject":
        from .oracle import oracle_find_claw

        for _ in range(3000):
            p = rng.uniform(0.5, 0.95)
            g = random_graph(rng, n, p)
            if oracle_find_claw(g) is None:
                return g
        raise GenerationExhausted(f"no claw-free graph of size {n} found by rejection")
    raise ValueError(f"unknown mode {mode!r}")
