"""End-to-end driver: screening, reduction, decomposition, case analysis.

Per connected component: reject claws, settle stability-2 components with
the C5 search, take a C5 from any non-bisimplicial neighborhood, and
otherwise antithicken and decompose.  Decomposed components split into
holes through loop strips (circular search), holes through strips with two
span lengths (weighted cycles in H), and the rest (odd cycles in the root
of the span skeleton).  A length-5 hole anywhere ends the search.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .decomposition import (
    CircularInterval,
    SpanSummary,
    StripDecomposition,
    decompose,
    span_summary,
    verify_decomposition,
)
from .errors import InternalInconsistency, NotLineGraph
from .fouquet import (
    C5Found,
    QuasiLine,
    alpha_at_most_2,
    classify_component,
    find_c5_alpha2,
    find_claw,
)
from .graphs import HoleCertificate, SimpleGraph
from .homogeneous import antithicken
from .interval import CircularModel, arcs_from_order, check_circular_model, recognize_circular
from .linegraph import root_graph
from .oddcycle import shortest_odd_cycle_ge5
from .strips import shortest_odd_hole_circular


@dataclass
class PipelineResult:
    kind: str  # "hole" | "none" | "not-claw-free"
    hole: HoleCertificate | None = None
    claw: tuple | None = None
    trace: str = ""

    @property
    def length(self):
        return None if self.hole is None else len(self.hole)


def case1_loop_holes(g: SimpleGraph, d: StripDecomposition):
    """Smallest odd hole inside any loop strip's induced subgraph."""
    best = None
    for eid in d.loops():
        strip = d.strips[eid]
        verts = sorted(strip.vertices)
        sub, back = g.induced(verts)
        inv = {v: i for i, v in enumerate(back)}
        if alpha_at_most_2(sub):
            hole = find_c5_alpha2(sub)
        else:
            order = tuple(inv[v] for v in strip.order)
            model = CircularModel(order, tuple(arcs_from_order(sub, order)))
            if not check_circular_model(sub, model):
                model = recognize_circular(sub)
            if model is None:
                raise InternalInconsistency(f"loop strip {eid} is not circular")
            hole = shortest_odd_hole_circular(sub, model)
        if hole is not None:
            lifted = hole.relabel(back)
            lifted.validate(g)
            if best is None or len(lifted) < len(best):
                best = lifted
            if len(best) == 5:
                return best
    return best


def _dijkstra_path(h, weights, banned, source, target):
    """Minimum-weight path avoiding banned edge ids; returns (cost, edge ids)."""
    adjacency = {v: [] for v in range(h.n)}
    for eid, a, b in h.edges:
        if eid in banned or a == b:
            continue
        adjacency[a].append((b, weights[eid], eid))
        adjacency[b].append((a, weights[eid], eid))
    for lst in adjacency.values():
        lst.sort(key=lambda t: t[2])
    dist = {source: 0}
    parent = {}
    heap = [(0, source)]
    done = set()
    while heap:
        cost, v = heapq.heappop(heap)
        if v in done:
            continue
        done.add(v)
        if v == target:
            break
        for u, w, eid in adjacency[v]:
            alt = cost + w
            if u not in dist or alt < dist[u]:
                dist[u] = alt
                parent[u] = (v, eid)
                heapq.heappush(heap, (alt, u))
    if target not in done:
        return None, None
    edges = []
    cur = target
    while cur != source:
        prev, eid = parent[cur]
        edges.append(eid)
        cur = prev
    return dist[target], list(reversed(edges))


def _oriented_span(d: StripDecomposition, eid: int, from_hub: int, span):
    """Span vertices ordered so the end at from_hub comes first."""
    _, tail, head = d.h.edges[eid]
    vs = span.vertices
    if len(vs) == 1:
        return vs
    return vs if tail == from_hub else vs[::-1]


def _assemble_cycle_hole(g, d, cycle_edges, start_hub, spans):
    """Concatenate spans along an H-cycle into a hole certificate."""
    seq = []
    hub = start_hub
    for eid in cycle_edges:
        _, a, b = d.h.edges[eid]
        if hub not in (a, b):
            raise InternalInconsistency("cycle edges do not chain")
        seq.extend(_oriented_span(d, eid, hub, spans[eid]))
        hub = b if hub == a else a
    if hub != start_hub:
        raise InternalInconsistency("cycle does not close")
    hole = HoleCertificate(seq)
    try:
        hole.validate(g)
    except ValueError as exc:
        raise InternalInconsistency(f"assembled case-2 hole invalid: {exc}") from None
    return hole


def case2_plus_holes(g: SimpleGraph, d: StripDecomposition, s: SpanSummary):
    """Smallest odd hole through a strip with two span lengths.

    Removing the pivot edge (and weight-1 parallels when its span length is
    2) and running a weighted shortest path between its endpoints gives the
    lightest cycle through the pivot; parity is fixed by swapping in the
    near-shortest span.
    """
    best = None
    loops = set(d.loops())
    for pivot in sorted(s.eplus):
        _, u, v = d.h.edges[pivot]
        banned = set(loops) | {pivot}
        if s.lengths[pivot] == 2:
            for eid, a, b in d.h.edges:
                if eid != pivot and {a, b} == {u, v} and s.lengths.get(eid) == 1:
                    banned.add(eid)
        cost, path_edges = _dijkstra_path(d.h, s.lengths, banned, u, v)
        if cost is None:
            continue
        w_total = cost + s.lengths[pivot]
        if w_total < 4:
            raise InternalInconsistency(f"case-2 cycle weight {w_total} below 4")
        spans = {eid: s.shortest[eid] for eid in path_edges}
        spans[pivot] = s.shortest[pivot] if w_total % 2 else s.near[pivot]
        hole = _assemble_cycle_hole(g, d, [pivot] + path_edges, v, spans)
        if best is None or (len(hole), hole.vertices) < (len(best), best.vertices):
            best = hole
        if len(best) == 5:
            return best
    return best


def case3_line_holes(g: SimpleGraph, d: StripDecomposition, s: SpanSummary):
    """Smallest odd hole avoiding loop strips and two-length strips.

    Shortest spans of the remaining strips induce a line graph; odd cycles
    of length >= 5 in its root lift back to holes.
    """
    keep = []
    for eid, length in s.lengths.items():
        if eid in s.eplus:
            continue
        keep.extend(s.shortest[eid].vertices)
    if not keep:
        return None
    gprime, back = g.induced(sorted(keep))
    best = None
    for comp in gprime.components():
        if len(comp) < 5:
            continue
        sub, back2 = gprime.induced(comp)
        try:
            root, ev = root_graph(sub)
        except NotLineGraph as exc:
            raise InternalInconsistency(f"span skeleton is not a line graph: {exc}")
        rep = {}
        for eid, a, b in root.edges:
            key = (min(a, b), max(a, b))
            if key not in rep or eid < rep[key]:
                rep[key] = eid
        hprime = SimpleGraph(root.n, sorted(rep))
        cyc = shortest_odd_cycle_ge5(hprime)
        if cyc is None:
            continue
        vs = cyc.vertices
        seq = []
        for i in range(len(vs)):
            a, b = vs[i], vs[(i + 1) % len(vs)]
            eid = rep[(min(a, b), max(a, b))]
            seq.append(back[back2[ev.edge_to_vertex[eid]]])
        hole = HoleCertificate(seq)
        try:
            hole.validate(g)
        except ValueError as exc:
            raise InternalInconsistency(f"case-3 lift invalid: {exc}") from None
        if best is None or len(hole) < len(best):
            best = hole
        if len(best) == 5:
            return best
    return best


def _cases_hole(g: SimpleGraph, d: StripDecomposition):
    summary = span_summary(d)
    best = None
    for hole in (
        case1_loop_holes(g, d),
        case2_plus_holes(g, d, summary),
        case3_line_holes(g, d, summary),
    ):
        if hole is not None and (best is None or len(hole) < len(best)):
            best = hole
            if len(best) == 5:
                break
    return best


def _reduced_component_hole(sub: SimpleGraph):
    """Quasi-line, pair-free, connected component after antithickening."""
    if sub.n < 5:
        return None, "small"
    if alpha_at_most_2(sub):
        return find_c5_alpha2(sub), "alpha2"
    model = recognize_circular(sub)
    if model is not None:
        return shortest_odd_hole_circular(sub, model), "circular"
    d = decompose(sub, try_circular=False)
    if isinstance(d, CircularInterval):
        return shortest_odd_hole_circular(sub, d.model), "circular"
    return _cases_hole(sub, d), "cases"


def _component_hole(sub: SimpleGraph):
    """Best hole of one claw-free connected component, with a trace label."""
    if sub.n < 5:
        return None, "small"
    if alpha_at_most_2(sub):
        return find_c5_alpha2(sub), "alpha2"
    cls = classify_component(sub)
    if isinstance(cls, C5Found):
        return cls.hole, "fouquet-c5"
    assert isinstance(cls, QuasiLine)
    reduction = antithicken(sub)
    g2 = reduction.graph
    best = None
    stage = "quasiline-none"
    for comp in g2.components():
        rsub, back = g2.induced(comp)
        hole, label = _reduced_component_hole(rsub)
        if hole is None:
            continue
        lifted = hole.relabel(back).relabel(reduction.injection)
        if best is None or len(lifted) < len(best):
            best = lifted
            stage = label
        if len(best) == 5:
            break
    return best, stage


def shortest_odd_hole(g: SimpleGraph, decomposition: StripDecomposition | None = None):
    """Find a smallest odd hole, decide none exists, or reject a claw."""
    claw = find_claw(g)
    if claw is not None:
        return PipelineResult("not-claw-free", claw=claw, trace="claw")
    best = None
    trace = "none"
    if decomposition is not None:
        ok, why = verify_decomposition(g, decomposition)
        if not ok:
            raise ValueError(f"supplied decomposition rejected: {why}")
        hole = _cases_hole(g, decomposition)
        if hole is not None:
            hole.validate(g)
            return PipelineResult("hole", hole=hole, trace="supplied-decomposition")
        return PipelineResult("none", trace="supplied-decomposition")
    for comp in g.components():
        sub, back = g.induced(comp)
        dmax = max(sub.degree(v) for v in range(sub.n))
        if dmax * dmax > 4 * sub.m:
            raise InternalInconsistency("degree bound violated on a claw-free component")
        hole, label = _component_hole(sub)
        if hole is None:
            continue
        lifted = hole.relabel(back)
        if best is None or len(lifted) < len(best):
            best = lifted
            trace = label
        if len(best) == 5:
            break
    if best is None:
        return PipelineResult("none", trace=trace)
    best.validate(g)
    return PipelineResult("hole", hole=best, trace=trace)
