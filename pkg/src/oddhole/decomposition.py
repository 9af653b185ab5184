"""Strip decompositions: data model, exact verifier, and a desk-scale constructor.

A decomposition is a multigraph H plus one strip per H-edge; the source graph
must be recoverable exactly as the disjoint strips with every hub clique
completed.  The constructor is a peeling loop (line-graph base case first,
then interior strips, then a bounded search for interiorless strips) and its
output is never returned unverified.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import DecompositionFailed, InternalInconsistency, NotLineGraph
from .graphs import Multigraph, SimpleGraph
from .interval import (
    CircularModel,
    check_linear_order,
    recognize_circular,
    recognize_linear,
)
from .linegraph import root_graph
from .strips import Strip, near_shortest_span, shortest_span


@dataclass
class CircularInterval:
    """Outcome of decompose() when the graph has a circular model instead."""

    model: CircularModel


class StripDecomposition:
    __slots__ = ("h", "strips")

    def __init__(self, h: Multigraph, strips: dict):
        self.h = h
        self.strips = dict(strips)

    def hub_cliques(self):
        """C_v per H vertex: X-ends of out-edges plus Y-ends of in-edges."""
        cliques = {v: set() for v in range(self.h.n)}
        for eid, tail, head in self.h.edges:
            s = self.strips[eid]
            cliques[tail] |= s.x
            cliques[head] |= s.y
        return cliques

    def loops(self):
        return [eid for eid, a, b in self.h.edges if a == b]

    def __repr__(self):
        return f"StripDecomposition(h={self.h!r}, strips={len(self.strips)})"


@dataclass
class SpanSummary:
    """Per-edge shortest span, its vertex count, and the near-shortest span."""

    shortest: dict
    near: dict
    lengths: dict
    eplus: frozenset


def _strip_shape_ok(g: SimpleGraph, s: Strip):
    """Optimal shape: singleton with X=Y=V, or connected non-clique with
    disjoint nonempty end-cliques."""
    if s.is_singleton():
        return True, None
    if s.x & s.y:
        return False, "non-singleton strip with overlapping end-cliques"
    verts = sorted(s.vertices)
    sub, _ = g.induced(verts)
    if not sub.is_connected():
        return False, "strip subgraph is disconnected"
    if sub.m == sub.n * (sub.n - 1) // 2:
        return False, "non-singleton strip is a clique"
    return True, None


def _validate_strip_against(g: SimpleGraph, s: Strip, is_loop: bool):
    """Strip.validate, except loop strips ignore X-Y pairs.

    A loop's hub clique completes X against Y inside the strip's own vertex
    set, so those pairs say nothing about the underlying linear order.
    """
    if not is_loop:
        try:
            s.validate()
        except ValueError as exc:
            return False, str(exc)
        return True, None
    verts = sorted(s.vertices)
    sub, back = g.induced(verts)
    inv = {v: i for i, v in enumerate(back)}
    drop = {
        (min(inv[a], inv[b]), max(inv[a], inv[b]))
        for a in s.x
        for b in s.y
        if a != b
    }
    kept = [e for e in sub.edges() if e not in drop]
    masked = SimpleGraph(sub.n, kept)
    local = Strip(
        masked,
        tuple(inv[v] for v in s.order),
        {inv[v] for v in s.x},
        {inv[v] for v in s.y},
    )
    try:
        local.validate()
    except ValueError as exc:
        return False, str(exc)
    return True, None


def verify_decomposition(g: SimpleGraph, d: StripDecomposition):
    """(True, None) iff d composes back to g exactly; else (False, reason)."""
    ids = sorted(d.strips)
    if ids != [eid for eid, _, _ in d.h.edges]:
        return False, "strip ids do not match the multigraph edges"
    seen = {}
    for eid in ids:
        for v in d.strips[eid].order:
            if not (0 <= v < g.n):
                return False, f"strip {eid} uses out-of-range vertex {v}"
            if v in seen:
                return False, f"vertex {v} appears in strips {seen[v]} and {eid}"
            seen[v] = eid
    if len(seen) != g.n:
        return False, "strips do not cover every vertex"

    loops = set(d.loops())
    for eid in ids:
        ok, why = _validate_strip_against(g, d.strips[eid], eid in loops)
        if not ok:
            return False, f"strip {eid}: {why}"
        ok, why = _strip_shape_ok(g, d.strips[eid])
        if not ok:
            return False, f"strip {eid}: {why}"

    hubs = d.hub_cliques()
    hub_membership = {v: set() for v in range(g.n)}
    for hv, members in hubs.items():
        ms = sorted(members)
        for i, a in enumerate(ms):
            hub_membership[a].add(hv)
            for b in ms[i + 1 :]:
                if b not in g.adj[a]:
                    return False, f"hub clique {hv} has non-adjacent pair ({a},{b})"
    for u, v in g.edges():
        if seen[u] != seen[v] and not (hub_membership[u] & hub_membership[v]):
            return False, f"cross-strip edge ({u},{v}) lies in no hub clique"
    return True, None


def span_summary(d: StripDecomposition) -> SpanSummary:
    """Shortest and near-shortest spans for every non-loop edge."""
    loops = set(d.loops())
    shortest = {}
    near = {}
    lengths = {}
    plus = []
    for eid in sorted(d.strips):
        if eid in loops:
            continue
        s = d.strips[eid]
        p = shortest_span(s)
        q = near_shortest_span(s)
        shortest[eid] = p
        near[eid] = q
        lengths[eid] = len(p)
        if q is not None:
            if len(p) < 2:
                raise InternalInconsistency(
                    f"edge {eid} has a near-shortest span but span length {len(p)}"
                )
            plus.append(eid)
    return SpanSummary(shortest, near, lengths, frozenset(plus))


# ---------------------------------------------------------------------------
# constructor


def _singleton_decomposition(g: SimpleGraph) -> StripDecomposition:
    root, ev = root_graph(g)
    strips = {}
    for eid, _, _ in root.edges:
        v = ev.edge_to_vertex[eid]
        strips[eid] = Strip(g, (v,), {v}, {v})
    return StripDecomposition(root, strips)


class _Peeler:
    """Working graph with each peeled strip replaced by a marker chain.

    The X-marker keeps the X-side external neighborhood, the Y-marker the
    Y-side, and a private middle marker joins them, so the strip reads as a
    three-edge path through two private hubs.  The middle marker has degree
    two and no outside neighbor, which pins its clique cells in any Krausz
    partition; a vertex adjacent to both ends (a parallel strip) can never
    be pulled into the chain.
    """

    def __init__(self, g: SimpleGraph):
        self.g = g
        self.w = g
        self.origin = list(range(g.n))  # W vertex -> original vertex, or None
        self.marker_role = {}  # W vertex -> (chain id, "x" | "m" | "y")
        self.chain_strip = {}  # chain id -> Strip in original ids

    def is_marker(self, wv: int) -> bool:
        return self.origin[wv] is None

    def peel(self, core_w, order_w, x_w, y_w):
        strip = Strip(
            self.g,
            tuple(self.origin[v] for v in order_w),
            {self.origin[v] for v in x_w},
            {self.origin[v] for v in y_w},
        )
        ext_x = set()
        for v in x_w:
            ext_x |= self.w.adj[v] - core_w
        ext_y = set()
        for v in y_w:
            ext_y |= self.w.adj[v] - core_w
        keep = [v for v in range(self.w.n) if v not in core_w]
        new_index = {v: i for i, v in enumerate(keep)}
        mx, mp, my = len(keep), len(keep) + 1, len(keep) + 2
        edges = []
        for u, v in self.w.edges():
            if u in core_w or v in core_w:
                continue
            edges.append((new_index[u], new_index[v]))
        for z in sorted(ext_x):
            edges.append((new_index[z], mx))
        for z in sorted(ext_y):
            edges.append((new_index[z], my))
        edges.append((mx, mp))
        edges.append((mp, my))
        chain_id = len(self.chain_strip)
        new_origin = [self.origin[v] for v in keep] + [None, None, None]
        new_roles = {new_index[wv]: tag for wv, tag in self.marker_role.items()}
        new_roles[mx] = (chain_id, "x")
        new_roles[mp] = (chain_id, "m")
        new_roles[my] = (chain_id, "y")
        self.chain_strip[chain_id] = strip
        self.w = SimpleGraph(len(keep) + 3, edges)
        self.origin = new_origin
        self.marker_role = new_roles


def _order_with_border_outside(sub: SimpleGraph, order, border_local):
    """Push border vertices to the ends of the order by swapping true twins.

    Returns a reordered tuple or None; a border vertex stuck strictly between
    interior vertices disqualifies the candidate.
    """
    order = list(order)
    n = len(order)
    closed = [sub.adj[v] | {v} for v in range(sub.n)]
    for _ in range(n):
        interior_pos = [i for i, v in enumerate(order) if v not in border_local]
        if not interior_pos:
            break
        lo, hi = interior_pos[0], interior_pos[-1]
        stuck = [i for i in range(lo, hi + 1) if order[i] in border_local]
        if not stuck:
            return tuple(order)
        moved = False
        for i in stuck:
            # drift toward the nearer end through twin swaps
            j = i - 1 if i - lo <= hi - i else i + 1
            if 0 <= j < n and closed[order[i]] == closed[order[j]]:
                order[i], order[j] = order[j], order[i]
                moved = True
                break
        if not moved:
            return None
    interior_pos = [i for i, v in enumerate(order) if v not in border_local]
    if interior_pos:
        lo, hi = interior_pos[0], interior_pos[-1]
        if any(order[i] in border_local for i in range(lo, hi + 1)):
            return None
    return tuple(order)


def _check_peel_sides(peeler: _Peeler, core, order_w, x, y):
    """Shared tail of peel validation: cliques, uniform externals, strip shape."""
    w = peeler.w
    if x & y:
        return None
    sub, _ = w.induced(sorted(core))
    if sub.m == sub.n * (sub.n - 1) // 2:
        return None  # cliques are never peelable strips
    for side in (x, y):
        ms = sorted(side)
        for i, a in enumerate(ms):
            for b in ms[i + 1 :]:
                if b not in w.adj[a]:
                    return None
        exts = [w.adj[v] - core for v in ms]
        if any(e != exts[0] for e in exts[1:]):
            return None
        crowd = sorted(set(ms) | exts[0])
        for i, a in enumerate(crowd):
            for b in crowd[i + 1 :]:
                if b not in w.adj[a]:
                    return None
    for v in core - x - y:
        if w.adj[v] - core:
            return None  # interior vertex with an external neighbor
    strip_candidate = Strip(w, tuple(order_w), x, y)
    try:
        strip_candidate.validate()
    except ValueError:
        return None
    return core, order_w, x, y


def _try_strip_core(peeler: _Peeler, interior, border):
    """Validate interior+border as a peelable strip; returns peel args or None."""
    w = peeler.w
    core = set(interior) | set(border)
    if any(peeler.is_marker(v) for v in core):
        return None
    sub, back = w.induced(sorted(core))
    inv = {v: i for i, v in enumerate(back)}
    if not sub.is_connected():
        return None
    order_local = recognize_linear(sub)
    if order_local is None:
        return None
    border_local = {inv[v] for v in border}
    fixed = _order_with_border_outside(sub, order_local, border_local)
    if fixed is None:
        return None
    order_w = [back[i] for i in fixed]
    left = []
    for v in order_w:
        if v in border:
            left.append(v)
        else:
            break
    right = []
    for v in reversed(order_w[len(left) :]):
        if v in border:
            right.append(v)
        else:
            break
    if len(left) + len(right) != len(border):
        return None
    if not left and not right:
        return None
    x = set(left) if left else {order_w[0]}
    y = set(right) if right else {order_w[-1]}
    return _check_peel_sides(peeler, core, order_w, x, y)


def _try_interiorless_core(peeler: _Peeler, gx, gy):
    """Two end-clique groups with no interior; order is the staircase.

    The only admissible orders put one group first and the other last, with
    reach into the far group growing toward the middle.
    """
    w = peeler.w
    core = set(gx) | set(gy)
    for a, b in ((gx, gy), (gy, gx)):
        left = sorted(a, key=lambda v: (len(w.adj[v] & b), v))
        right = sorted(b, key=lambda v: (-len(w.adj[v] & a), v))
        order_w = left + right
        sub, back = w.induced(sorted(core))
        inv = {v: i for i, v in enumerate(back)}
        if not sub.is_connected():
            return None
        if not check_linear_order(sub, [inv[v] for v in order_w]):
            continue
        got = _check_peel_sides(peeler, core, order_w, set(a), set(b))
        if got is not None:
            return got
    return None


def _find_interior_peel(peeler: _Peeler, budget: int = 6000):
    """Largest peelable strip found by growing interiors from every seed.

    Taking the largest candidate matters: peeling a front fragment of a long
    strip is locally valid but strands an unpeelable remainder.
    """
    from collections import deque

    w = peeler.w
    best = None
    seen = set()
    queue = deque()

    def enqueue(interior):
        key = frozenset(interior)
        if key not in seen:
            seen.add(key)
            queue.append(key)

    for seed in range(w.n):
        if not peeler.is_marker(seed):
            enqueue({seed})
    # after some peels, surviving interiors sit out of reach of every marker
    quiet = [
        v
        for v in range(w.n)
        if not peeler.is_marker(v)
        and not any(peeler.is_marker(u) for u in w.adj[v])
    ]
    if quiet:
        sub, back = w.induced(quiet)
        for comp in sub.components():
            enqueue({back[i] for i in comp})

    def enqueue_front(interior):
        key = frozenset(interior)
        if key not in seen:
            seen.add(key)
            queue.appendleft(key)

    nodes = 0
    while queue and nodes < budget:
        nodes += 1
        interior = queue.popleft()
        border = set()
        for v in interior:
            border |= w.adj[v]
        border -= interior
        if not border:
            continue  # swallowed a whole component
        if any(peeler.is_marker(v) for v in border):
            continue
        got = _try_strip_core(peeler, interior, border)
        if got is not None and (best is None or len(got[0]) > len(best[0])):
            best = got
        if got is not None:
            # a valid candidate may be a front fragment of a longer strip;
            # growing it further gets priority so the full strip wins
            for b in sorted(border, reverse=True):
                enqueue_front(interior | {b})
        else:
            for b in sorted(border):
                enqueue(interior | {b})
    return best


def _bron_kerbosch(g: SimpleGraph):
    """All maximal cliques, pivoting on the largest-degree candidate."""
    cliques = []

    def expand(r, p, x):
        if not p and not x:
            cliques.append(sorted(r))
            return
        pivot = max(p | x, key=lambda v: len(g.adj[v] & p))
        for v in sorted(p - g.adj[pivot]):
            expand(r | {v}, p & g.adj[v], x & g.adj[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(range(g.n)), set())
    return cliques


def _find_interiorless_peel(peeler: _Peeler, budget: int = 4000):
    """Bounded search for a two-clique strip with no interior vertices.

    Candidate end-cliques are groups of vertices sharing the same
    neighborhood outside a maximal clique.
    """
    w = peeler.w
    groups = []
    seen_groups = set()
    for clique in _bron_kerbosch(w):
        by_ext = {}
        for v in clique:
            if peeler.is_marker(v):
                continue
            by_ext.setdefault(frozenset(w.adj[v] - set(clique)), []).append(v)
        for members in by_ext.values():
            key = frozenset(members)
            if key not in seen_groups:
                seen_groups.add(key)
                groups.append(key)
    attempts = 0
    for gx in groups:
        for gy in groups:
            if gx is gy or gx & gy:
                continue
            attempts += 1
            if attempts > budget:
                return None
            if not any(b in w.adj[a] for a in gx for b in gy):
                continue
            got = _try_interiorless_core(peeler, gx, gy)
            if got is not None:
                return got
    return None


def _assemble(peeler: _Peeler):
    """Root the working graph and contract marker chains back into strips.

    The middle marker's root edge names the two private hubs; the X-marker's
    far endpoint becomes the strip's tail, the Y-marker's its head, so no
    orientation guessing is needed.
    """
    root, ev = root_graph(peeler.w)
    by_chain = {}
    singles = {}
    for eid, a, b in root.edges:
        wv = ev.edge_to_vertex[eid]
        if peeler.is_marker(wv):
            cid, role = peeler.marker_role[wv]
            by_chain.setdefault(cid, {})[role] = (a, b)
        else:
            singles[eid] = (peeler.origin[wv], a, b)
    chain_edges = {}
    drop_hubs = set()
    for cid in sorted(by_chain):
        roles = by_chain[cid]
        if set(roles) != {"x", "m", "y"}:
            raise DecompositionFailed("marker chain split by the root")
        xa, xb = roles["x"]
        ma, mb = roles["m"]
        ya, yb = roles["y"]
        w1 = ({xa, xb} & {ma, mb}) - {ya, yb}
        w2 = ({ya, yb} & {ma, mb}) - {xa, xb}
        if len(w1) != 1 or len(w2) != 1:
            raise DecompositionFailed("marker chain hubs are ambiguous")
        w1, w2 = w1.pop(), w2.pop()
        tail = xa if xb == w1 else xb
        head = ya if yb == w2 else yb
        if {tail, head} & {w1, w2}:
            raise DecompositionFailed("marker chain folded onto its own hubs")
        drop_hubs.add(w1)
        drop_hubs.add(w2)
        chain_edges[cid] = (tail, head)
    for eid, (v, a, b) in singles.items():
        if a in drop_hubs or b in drop_hubs:
            raise DecompositionFailed("a strip landed on a marker chain hub")
    hub_ids = sorted(set(range(root.n)) - drop_hubs)
    renum = {h: i for i, h in enumerate(hub_ids)}
    edges = []
    strips = {}
    for eid in sorted(singles):
        v, a, b = singles[eid]
        strips[len(edges)] = Strip(peeler.g, (v,), {v}, {v})
        edges.append((renum[a], renum[b]))
    for cid in sorted(chain_edges):
        tail, head = chain_edges[cid]
        strips[len(edges)] = peeler.chain_strip[cid]
        edges.append((renum[tail], renum[head]))
    d = StripDecomposition(Multigraph(len(hub_ids), edges), strips)
    ok, why = verify_decomposition(peeler.g, d)
    if not ok:
        raise DecompositionFailed(f"assembly failed verification: {why}")
    return d


def decompose(g: SimpleGraph, *, try_circular: bool = True):
    """A checked CircularModel or a verified StripDecomposition.

    Expects a connected quasi-line graph without nonlinear homogeneous pairs
    of cliques; anything else may raise DecompositionFailed.
    """
    if try_circular:
        model = recognize_circular(g)
        if model is not None:
            return CircularInterval(model)
    try:
        d = _singleton_decomposition(g)
        ok, why = verify_decomposition(g, d)
        if ok:
            return d
        raise InternalInconsistency(f"singleton decomposition invalid: {why}")
    except NotLineGraph:
        pass
    for peel_budget in (1200, 25000):
        peeler = _Peeler(g)
        try:
            return _peel_loop(peeler, peel_budget)
        except DecompositionFailed:
            continue
    raise DecompositionFailed("no circular model, root, or peelable strip")


def _peel_loop(peeler: _Peeler, peel_budget: int):
    for _ in range(peeler.g.n):
        try:
            return _assemble(peeler)
        except NotLineGraph:
            pass
        except DecompositionFailed:
            pass
        got = _find_interior_peel(peeler, budget=peel_budget)
        if got is None:
            got = _find_interiorless_peel(peeler)
        if got is None:
            raise DecompositionFailed("no circular model, root, or peelable strip")
        core, order_w, x, y = got
        peeler.peel(core, order_w, x, y)
    raise DecompositionFailed("peeling did not terminate")


# ---------------------------------------------------------------------------
# serialization


def decomposition_to_json(d: StripDecomposition) -> str:
    doc = {
        "H": {"n": d.h.n, "edges": [[eid, a, b] for eid, a, b in d.h.edges]},
        "strips": {
            str(eid): {
                "vertices": sorted(s.vertices),
                "order": list(s.order),
                "X": sorted(s.x),
                "Y": sorted(s.y),
            }
            for eid, s in d.strips.items()
        },
    }
    return json.dumps(doc)


def decomposition_from_json(text: str, g: SimpleGraph) -> StripDecomposition:
    doc = json.loads(text)
    h = Multigraph(doc["H"]["n"], [tuple(e) for e in doc["H"]["edges"]])
    strips = {}
    for key, sd in doc["strips"].items():
        eid = int(key)
        order = tuple(sd["order"])
        if sorted(order) != sorted(sd["vertices"]):
            raise ValueError(f"strip {eid}: order and vertices disagree")
        strips[eid] = Strip(g, order, set(sd["X"]), set(sd["Y"]))
    return StripDecomposition(h, strips)
