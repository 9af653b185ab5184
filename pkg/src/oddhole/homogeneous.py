"""Nonlinear homogeneous pairs of cliques and the antithickening reduction.

A homogeneous pair of cliques is a pair of disjoint cliques (A, B) covering
at least three vertices such that every outside vertex is complete or
anticomplete to each of A and B; it is nonlinear when A u B holds an induced
C4.  Antithickening shrinks every such pair to three representative
vertices, which keeps the graph an induced subgraph of the original and
preserves shortest odd hole lengths.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInconsistency, SearchBudgetExceeded
from .graphs import SimpleGraph


@dataclass(frozen=True)
class CliquePair:
    a: frozenset
    b: frozenset

    def validate(self, g: SimpleGraph) -> None:
        if self.a & self.b:
            raise ValueError("sides overlap")
        if len(self.a) + len(self.b) < 3:
            raise ValueError("pair too small")
        for side in (self.a, self.b):
            members = sorted(side)
            for i, u in enumerate(members):
                for v in members[i + 1 :]:
                    if v not in g.adj[u]:
                        raise ValueError(f"side not a clique: ({u},{v})")
        both = self.a | self.b
        for z in range(g.n):
            if z in both:
                continue
            for side in (self.a, self.b):
                hits = len(g.adj[z] & side)
                if hits not in (0, len(side)):
                    raise ValueError(f"vertex {z} distinguishes a side")
        if _c4_inside(g, both) is None:
            raise ValueError("pair is linear: no induced C4 inside")


def _c4_inside(g: SimpleGraph, verts):
    """An induced 4-cycle (w, m1, y, m2) within verts, or None."""
    vs = sorted(verts)
    for i, w in enumerate(vs):
        for y in vs[i + 1 :]:
            if y in g.adj[w]:
                continue
            middles = sorted(g.adj[w] & g.adj[y] & set(vs))
            for j, m1 in enumerate(middles):
                for m2 in middles[j + 1 :]:
                    if m2 not in g.adj[m1]:
                        return (w, m1, y, m2)
    return None


def _induced_c4s(g: SimpleGraph):
    """All induced 4-cycles as (w, m1, y, m2) with w-y and m1-m2 non-adjacent.

    Non-adjacent pairs with two or more common neighbors are collected by
    scanning each vertex's neighborhood, which is linear in the sum of
    squared degrees instead of quadratic in n.
    """
    pair_middles = {}
    for m in range(g.n):
        nbrs = g.neighbors[m]
        for i, w in enumerate(nbrs):
            for y in nbrs[i + 1 :]:
                if y not in g.adj[w]:
                    pair_middles.setdefault((w, y), []).append(m)
    out = []
    for w, y in sorted(pair_middles):
        middles = sorted(pair_middles[(w, y)])
        for j, m1 in enumerate(middles):
            for m2 in middles[j + 1 :]:
                if m2 not in g.adj[m1]:
                    out.append((w, m1, y, m2))
    return out


def _grow_pair(g: SimpleGraph, a0, b0, budget: int):
    """Absorb distinguishing vertices; each one is forced onto one side.

    A vertex that sees part of a side cannot join that side (joining needs
    completeness), so it must join the other; failure kills the seed.
    """
    a, b = set(a0), set(b0)
    steps = 0
    while True:
        steps += 1
        if steps > budget:
            raise SearchBudgetExceeded("pair growth exceeded its budget")
        both = a | b
        mover = None
        for z in range(g.n):
            if z in both:
                continue
            hits_a = len(g.adj[z] & a)
            hits_b = len(g.adj[z] & b)
            mixed_a = 0 < hits_a < len(a)
            mixed_b = 0 < hits_b < len(b)
            if not (mixed_a or mixed_b):
                continue
            if mixed_a and mixed_b:
                return None
            if mixed_a:
                if hits_b != len(b):
                    return None
                mover = (z, "b")
            else:
                if hits_a != len(a):
                    return None
                mover = (z, "a")
            break
        if mover is None:
            return frozenset(a), frozenset(b)
        z, side = mover
        (a if side == "a" else b).add(z)


def _exhaustive_pair(g: SimpleGraph):
    """Seed-anchored exhaustive search; only sensible for small graphs."""
    rest_all = list(range(g.n))
    for w, m1, y, m2 in _induced_c4s(g):
        for a0, b0 in (((w, m1), (y, m2)), ((m1, y), (m2, w))):
            seed = set(a0) | set(b0)
            rest = [v for v in rest_all if v not in seed]

            def assign(idx, a, b):
                if idx == len(rest):
                    pair = CliquePair(frozenset(a), frozenset(b))
                    try:
                        pair.validate(g)
                    except ValueError:
                        return None
                    return pair
                z = rest[idx]
                for choice in (None, "a", "b"):
                    if choice == "a" and any(z not in g.adj[u] for u in a):
                        continue
                    if choice == "b" and any(z not in g.adj[u] for u in b):
                        continue
                    na = a | {z} if choice == "a" else a
                    nb = b | {z} if choice == "b" else b
                    got = assign(idx + 1, na, nb)
                    if got is not None:
                        return got
                return None

            got = assign(0, set(a0), set(b0))
            if got is not None:
                return got
    return None


def find_nonlinear_hpc(g: SimpleGraph, budget: int = 4096):
    """A nonlinear homogeneous pair of cliques, or None if none exists.

    Every nonlinear pair contains an induced C4 split two-and-two across the
    sides, so C4s seed the search and forced growth does the rest.
    """
    try:
        for w, m1, y, m2 in _induced_c4s(g):
            for a0, b0 in (((w, m1), (y, m2)), ((m1, y), (m2, w))):
                got = _grow_pair(g, a0, b0, budget)
                if got is not None:
                    pair = CliquePair(*got)
                    pair.validate(g)
                    return pair
        return None
    except SearchBudgetExceeded:
        if g.n <= 10:
            return _exhaustive_pair(g)
        raise


@dataclass
class Antithickening:
    """Reduced graph plus the injection certifying it is an induced subgraph."""

    graph: SimpleGraph
    injection: tuple

    def validate(self, original: SimpleGraph) -> None:
        inj = self.injection
        image = set(inj)
        if len(image) != len(inj) or len(inj) != self.graph.n:
            raise ValueError("injection is not injective")
        mapped = set()
        for u, v in self.graph.edges():
            a, b = inj[u], inj[v]
            mapped.add((a, b) if a < b else (b, a))
        wanted = {
            (u, v) for u, v in original.edges() if u in image and v in image
        }
        if mapped != wanted:
            off = (mapped ^ wanted).pop()
            raise ValueError(f"adjacency not preserved at {off}")


def antithicken(g: SimpleGraph) -> Antithickening:
    """Shrink nonlinear homogeneous pairs of cliques until none remain.

    Each pair (A, B) collapses to three original vertices: a B-vertex b1
    seeing part of A, an A-neighbor of b1, and an A-non-neighbor of b1.
    That realizes the contract-and-split construction as an induced
    subgraph, so odd hole lengths survive.
    """
    current = g
    injection = list(range(g.n))
    while True:
        pair = find_nonlinear_hpc(current)
        if pair is None:
            break
        a_side, b_side = pair.a, pair.b
        b1 = a1 = a2 = None
        for side, other in ((b_side, a_side), (a_side, b_side)):
            for cand in sorted(side):
                hits = current.adj[cand] & other
                if hits and hits != other:
                    b1 = cand
                    a1 = min(hits)
                    a2 = min(other - hits)
                    break
            if b1 is not None:
                break
        if b1 is None:
            raise InternalInconsistency("nonlinear pair with no distinguishing vertex")
        keep = sorted(set(range(current.n)) - (a_side | b_side) | {a1, a2, b1})
        reduced, back = current.induced(keep)
        injection = [injection[v] for v in back]
        if reduced.n >= current.n:
            raise InternalInconsistency("antithickening failed to shrink the graph")
        current = reduced
    result = Antithickening(current, tuple(injection))
    result.validate(g)
    return result
