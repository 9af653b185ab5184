"""Linear (proper interval) and circular interval recognition.

Orders are tuples mapping position to vertex.  A linear order is valid when
every closed neighborhood occupies a contiguous block of positions (the
umbrella property).  Circular models add an explicit arc set because an
order alone does not pin down the class; constructors here are heuristic and
every returned model has passed its exact checker.
"""

from __future__ import annotations

import json
from dataclasses import dataclass


class _Block:
    __slots__ = ("members", "prev", "next")

    def __init__(self, members):
        self.members = members  # dict vertex -> None, kept in rank order
        self.prev = None
        self.next = None


def _lexbfs(g, rank):
    """Lexicographic BFS; ties go to the smallest rank in the first block.

    Blocks stay sorted by rank throughout because refinement preserves
    relative order, so selection and splitting are cheap.
    """
    n = g.n
    head = _Block(dict.fromkeys(sorted(range(n), key=lambda v: rank[v])))
    vertex_block = {v: head for v in range(n)}
    order = []
    while head is not None:
        v = next(iter(head.members))
        del head.members[v]
        del vertex_block[v]
        if not head.members:
            head = head.next
            if head is not None:
                head.prev = None
        order.append(v)
        by_block = {}
        for u in g.neighbors[v]:
            b = vertex_block.get(u)
            if b is not None:
                by_block.setdefault(id(b), (b, []))[1].append(u)
        for b, members in by_block.values():
            if len(members) == len(b.members):
                continue  # nothing to peel off
            mate = _Block(dict.fromkeys(sorted(members, key=lambda u: rank[u])))
            for u in members:
                del b.members[u]
                vertex_block[u] = mate
            mate.next = b
            mate.prev = b.prev
            b.prev = mate
            if mate.prev is not None:
                mate.prev.next = mate
            else:
                head = mate
    return order


def _is_chordal(g) -> bool:
    """Maximum cardinality search plus perfect-elimination check."""
    n = g.n
    if n <= 3:
        return True
    number = [-1] * n
    buckets = [dict.fromkeys(range(n))]
    pointer = [0] * n  # current bucket (= count of numbered neighbors)
    top = 0
    for num in range(n - 1, -1, -1):
        while not buckets[top]:
            top -= 1
        v = next(iter(buckets[top]))
        del buckets[top][v]
        number[v] = num
        for u in g.neighbors[v]:
            if number[u] >= 0:
                continue
            del buckets[pointer[u]][u]
            pointer[u] += 1
            while len(buckets) <= pointer[u]:
                buckets.append({})
            buckets[pointer[u]][u] = None
            if pointer[u] > top:
                top = pointer[u]
    for v in range(n):
        later = [u for u in g.neighbors[v] if number[u] > number[v]]
        if not later:
            continue
        parent = min(later, key=lambda u: number[u])
        for u in later:
            if u != parent and u not in g.adj[parent]:
                return False
    return True


def check_linear_order(g, order) -> bool:
    """True iff every closed neighborhood is contiguous in the order."""
    if sorted(order) != list(range(g.n)):
        return False
    pos = [0] * g.n
    for p, v in enumerate(order):
        pos[v] = p
    for v in range(g.n):
        lo = hi = pos[v]
        for u in g.neighbors[v]:
            p = pos[u]
            if p < lo:
                lo = p
            elif p > hi:
                hi = p
        if hi - lo != g.degree(v):
            return False
    return True


def _exhaustive_linear(g):
    """Backtracking over orders with both contiguity rules enforced.

    A placed vertex closes once a later non-neighbor arrives (its interval
    ended, so no further neighbor may appear), and a new vertex's placed
    neighbors must form a suffix of the order.
    """
    bits = g.bits()
    n = g.n
    order = []

    def rec(placed_mask, closed_mask):
        if len(order) == n:
            return True
        for v in range(n):
            if (placed_mask >> v) & 1:
                continue
            if bits[v] & closed_mask:
                continue
            suffix = 0
            for u in reversed(order):
                if (bits[v] >> u) & 1:
                    suffix |= 1 << u
                else:
                    break
            if bits[v] & placed_mask != suffix:
                continue
            order.append(v)
            if rec(placed_mask | (1 << v), closed_mask | (placed_mask & ~bits[v])):
                return True
            order.pop()
        return False

    if rec(0, 0):
        return tuple(order)
    return None


def _recognize_linear_connected(g):
    if g.n <= 1:
        return tuple(range(g.n))
    if not _is_chordal(g):
        return None
    rank1 = list(range(g.n))
    o1 = _lexbfs(g, rank1)
    rank2 = [0] * g.n
    for p, v in enumerate(o1):
        rank2[v] = g.n - 1 - p
    o2 = _lexbfs(g, rank2)
    rank3 = [0] * g.n
    for p, v in enumerate(o2):
        rank3[v] = g.n - 1 - p
    o3 = _lexbfs(g, rank3)
    for cand in (o3, o2, o1):
        if check_linear_order(g, cand):
            return tuple(cand)
    if g.n <= 10:
        got = _exhaustive_linear(g)
        if got is not None and check_linear_order(g, got):
            return got
    return None


def recognize_linear(g):
    """An order satisfying check_linear_order, or None.

    Disconnected inputs are ordered component by component.
    """
    comps = g.components()
    if len(comps) <= 1:
        return _recognize_linear_connected(g)
    order = []
    for comp in comps:
        sub, back = g.induced(comp)
        sub_order = _recognize_linear_connected(sub)
        if sub_order is None:
            return None
        order.extend(back[i] for i in sub_order)
    return tuple(order)


@dataclass(frozen=True)
class CircularModel:
    """Vertices on circle positions plus arcs given as inclusive position ranges."""

    order: tuple
    arcs: tuple

    def to_json(self) -> str:
        return json.dumps({"order": list(self.order), "arcs": [list(a) for a in self.arcs]})

    @staticmethod
    def from_json(text: str) -> "CircularModel":
        doc = json.loads(text)
        return CircularModel(tuple(doc["order"]), tuple(tuple(a) for a in doc["arcs"]))


def arcs_from_order(g, order):
    """Clockwise clique-run arcs for each vertex.

    Each arc extends from a vertex while the next position stays adjacent to
    everything collected so far, so an arc never implies a missing edge.
    """
    n = len(order)
    arcs = []
    for p in range(n):
        v = order[p]
        members = [v]
        t = 0
        while t < n - 1:
            w = order[(p + t + 1) % n]
            if all(w in g.adj[u] for u in members):
                members.append(w)
                t += 1
            else:
                break
        arcs.append((p, (p + t) % n))
    return arcs


def check_circular_model(g, model: CircularModel) -> bool:
    """True iff arc-implied adjacency equals g's adjacency exactly."""
    n = g.n
    order = model.order
    if sorted(order) != list(range(n)):
        return False
    implied = set()
    for i, j in model.arcs:
        if not (0 <= i < n and 0 <= j < n):
            return False
        span = (j - i) % n + 1
        members = [order[(i + t) % n] for t in range(span)]
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                u, w = members[a], members[b]
                if u == w:
                    continue
                implied.add((u, w) if u < w else (w, u))
    return implied == set(g.edges())


def _placed_prefix_suffix_ok(bits_w, placed):
    """Neighbors of w among placed must form a prefix run, a suffix run, or both.

    Counting runs of True circularly merges prefix+suffix into one block, so
    validity means at most one circular block and it must touch an end.
    """
    flags = [(bits_w >> u) & 1 for u in placed]
    blocks = 0
    for i in range(len(flags)):
        if flags[i] and not flags[i - 1]:
            blocks += 1
    if blocks == 0:
        return True
    return blocks == 1 and bool(flags[0] or flags[-1])


def _cycle_search(g, placed, rest, budget=20000):
    """Complete a circular order by backtracking; returns a checked model.

    Consecutive positions must be adjacent, which is forced for connected
    graphs that are not linear interval graphs.  Every completion is run
    through the exact checker before being accepted.
    """
    bits = g.bits()
    nodes = 0

    def rec():
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            return None
        if not rest:
            if placed[0] not in g.adj[placed[-1]]:
                return None
            model = CircularModel(tuple(placed), tuple(arcs_from_order(g, placed)))
            if check_circular_model(g, model):
                return model
            return None
        last = placed[-1]
        for w in sorted(rest & g.adj[last]):
            if not _placed_prefix_suffix_ok(bits[w], placed):
                continue
            placed.append(w)
            rest.remove(w)
            got = rec()
            if got is not None:
                return got
            placed.pop()
            rest.add(w)
        return None

    return rec()


def recognize_circular(g):
    """A checked CircularModel, or None.

    Any linear graph is wrapped directly.  Otherwise the circle is cut at a
    low-degree vertex v: the non-neighbors of v must occupy a contiguous run
    (hence induce a linear interval graph), and the neighborhood is stitched
    back by bounded backtracking.  The exact checker has the final word.
    """
    n = g.n
    if n == 0:
        return CircularModel((), ())
    lin = recognize_linear(g)
    if lin is not None:
        model = CircularModel(tuple(lin), tuple(arcs_from_order(g, lin)))
        if check_circular_model(g, model):
            return model
    if not g.is_connected():
        # a model for a disconnected graph never needs the full circle,
        # so failing the linear path settles it
        return None
    by_degree = sorted(range(n), key=lambda v: (g.degree(v), v))
    attempts = by_degree if n <= 256 else by_degree[:8]
    for v in attempts:
        outside = sorted(set(range(n)) - set(g.neighbors[v]) - {v})
        if not outside:
            continue
        sub, back = g.induced(outside)
        sub_order = recognize_linear(sub)
        if sub_order is None:
            return None  # the outside run must be linear in any model
        if not sub.is_connected():
            return None  # non-linear circular graphs have adjacent consecutive positions
        run = [back[i] for i in sub_order]
        for base in (run, run[::-1]):
            model = _cycle_search(g, list(base), set(g.neighbors[v]) | {v})
            if model is not None:
                return model
    if n <= 9:
        return _cycle_search(g, [0], set(range(1, n)), budget=10**7)
    return None
