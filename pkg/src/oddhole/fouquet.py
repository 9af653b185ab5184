"""Claw screening and the bisimplicial / C5-in-neighborhood trichotomy.

A connected claw-free graph with three pairwise non-adjacent vertices either
has every vertex bisimplicial (quasi-line) or has a vertex whose neighborhood
contains an induced C5, and that C5 is then a globally shortest odd hole.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field

from .errors import InternalInconsistency, PreconditionViolated
from .graphs import HoleCertificate, SimpleGraph

DEBUG_CHECKS = os.environ.get("ODDHOLE_DEBUG", "") not in ("", "0", "false")


@dataclass
class AlphaAtMost2:
    """No three pairwise non-adjacent vertices; only C5 can be an odd hole."""


@dataclass
class C5Found:
    """A C5 inside N(vertex); the five cycle vertices all see `vertex`."""

    vertex: int
    hole: HoleCertificate


@dataclass
class QuasiLine:
    """Every vertex bisimplicial; maps each vertex to its two-clique cover."""

    bipartitions: dict = field(default_factory=dict)


def find_claw(g: SimpleGraph):
    """First (center, a, b, c) inducing a claw, or None; lexicographic scan."""
    bits = g.bits()
    for v in range(g.n):
        nbrs = g.neighbors[v]
        if len(nbrs) < 3:
            continue
        nbr_mask = 0
        for u in nbrs:
            nbr_mask |= 1 << u
        for i, a in enumerate(nbrs):
            rest = nbr_mask & ~bits[a] & ~(1 << a)
            if not rest:
                continue
            for b in nbrs[i + 1 :]:
                if not (rest >> b) & 1:
                    continue
                third = rest & ~bits[b] & ~(1 << b)
                third &= ~((1 << (b + 1)) - 1)  # keep c > b for lexicographic order
                if third:
                    c = (third & -third).bit_length() - 1
                    return (v, a, b, c)
    return None


def alpha_at_most_2(g: SimpleGraph) -> bool:
    """True iff the complement is triangle-free.

    A graph with more than n^2/4 complement edges always has a complement
    triangle, so dense-complement inputs exit immediately.
    """
    n = g.n
    if n < 3:
        return True
    co_edges = n * (n - 1) // 2 - g.m
    if co_edges > n * n // 4:
        return False
    bits = g.bits()
    full = (1 << n) - 1
    for u in range(n):
        non = full & ~bits[u] & ~(1 << u)
        non &= ~((1 << u) - 1)  # complement triangles scanned with u minimal
        rest = non
        while rest:
            a = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if non & ~bits[a] & ~((1 << (a + 1)) - 1):
                return False
    return True


def find_c5_alpha2(g: SimpleGraph):
    """Induced C5 in a graph with no stable set of size 3, or None.

    For each edge uv: X = N(u) - N[v], Y = N(v) - N[u], Z = rest.  When all
    three are nonempty, X and Y are complete to Z, so any non-edge xy across
    X,Y yields the cycle u,v,y,z,x.
    """
    if DEBUG_CHECKS:
        from .oracle import oracle_alpha_at_most_2

        if g.n <= 24 and not oracle_alpha_at_most_2(g):
            raise PreconditionViolated("find_c5_alpha2 needs alpha <= 2")
    bits = g.bits()
    full = (1 << g.n) - 1
    for u, v in g.edges():
        x_mask = bits[u] & ~bits[v] & ~(1 << v)
        y_mask = bits[v] & ~bits[u] & ~(1 << u)
        z_mask = full & ~bits[u] & ~bits[v] & ~(1 << u) & ~(1 << v)
        if not (x_mask and y_mask and z_mask):
            continue
        xs = x_mask
        while xs:
            x = (xs & -xs).bit_length() - 1
            xs &= xs - 1
            missing = y_mask & ~bits[x]
            if missing:
                y = (missing & -missing).bit_length() - 1
                z = (z_mask & -z_mask).bit_length() - 1
                cert = HoleCertificate((u, v, y, z, x))
                try:
                    cert.validate(g)
                except ValueError as exc:
                    raise PreconditionViolated(
                        f"C5 construction broke; alpha(g) > 2? ({exc})"
                    ) from None
                return cert
    return None


def is_bisimplicial(g: SimpleGraph, v: int):
    """(True, (cliqueA, cliqueB)) when N(v) splits into two cliques, else (False, None).

    Works by 2-coloring the complement of the neighborhood.
    """
    nbrs = g.neighbors[v]
    color = {}
    for start in nbrs:
        if start in color:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            a = queue.popleft()
            for b in nbrs:
                if b == a or b in g.adj[a]:
                    continue
                if b not in color:
                    color[b] = color[a] ^ 1
                    queue.append(b)
                elif color[b] == color[a]:
                    return False, None
    part_a = tuple(u for u in nbrs if color[u] == 0)
    part_b = tuple(u for u in nbrs if color[u] == 1)
    return True, (part_a, part_b)


def classify_component(g: SimpleGraph):
    """QuasiLine with per-vertex covers, or C5Found at a non-bisimplicial vertex.

    Expects a connected claw-free graph with alpha >= 3.
    """
    if DEBUG_CHECKS:
        if find_claw(g) is not None:
            raise PreconditionViolated("classify_component needs a claw-free graph")
        if alpha_at_most_2(g):
            raise PreconditionViolated("classify_component needs alpha >= 3")
    covers = {}
    for v in range(g.n):
        ok, parts = is_bisimplicial(g, v)
        if not ok:
            sub, back = g.induced(g.neighbors[v])
            local = find_c5_alpha2(sub)
            if local is None:
                raise InternalInconsistency(
                    f"vertex {v} not bisimplicial yet N({v}) has no C5"
                )
            return C5Found(v, local.relabel(back))
        covers[v] = parts
    return QuasiLine(covers)
