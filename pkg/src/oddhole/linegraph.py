"""Line graphs of multigraphs and root recovery.

Root recovery runs in three stages: collapse true-twin classes (parallel
edges of any root show up as true twins), find a Krausz clique partition of
the twin-free remainder per component, then re-expand each twin class into
that many parallel edges.  The result is always re-checked by rebuilding the
line graph, so a successful return is a certificate.
"""

from __future__ import annotations

from itertools import combinations

from .errors import InternalInconsistency, NotLineGraph
from .graphs import EdgeVertexMap, Multigraph, SimpleGraph


def line_graph(h: Multigraph):
    """Line graph of a multigraph; loops and parallels allowed.

    Two edges are adjacent iff they share at least one endpoint; a loop at v
    counts as sharing v with every other edge at v.
    """
    at_vertex = [[] for _ in range(h.n)]
    for eid, a, b in h.edges:
        at_vertex[a].append(eid)
        if b != a:
            at_vertex[b].append(eid)
    edges = set()
    for group in at_vertex:
        for i, e in enumerate(group):
            for f in group[i + 1 :]:
                edges.add((e, f) if e < f else (f, e))
    g = SimpleGraph(h.m, sorted(edges))
    return g, EdgeVertexMap({eid: eid for eid in range(h.m)})


def _twin_classes(g: SimpleGraph):
    """Partition vertices by closed neighborhood (true twins)."""
    buckets = {}
    for v in range(g.n):
        key = g.adj[v] | {v}
        buckets.setdefault(frozenset(key), []).append(v)
    return [sorted(vs) for vs in buckets.values()]


def _triangles_on(adj, u, v):
    return [w for w in adj[u] if w in adj[v]]


def _odd_triangle(adj, n, tri):
    """A triangle is odd if some outside vertex sees 1 or 3 of its corners."""
    ts = set(tri)
    counts = {}
    for t in tri:
        for w in adj[t]:
            if w not in ts:
                counts[w] = counts.get(w, 0) + 1
    return any(c in (1, 3) for c in counts.values())


def _starting_cell(g: SimpleGraph, edge):
    """Pick one clique of the Krausz partition (Roussopoulos selection)."""
    adj = g.adj
    u, v = edge
    tris = _triangles_on(adj, u, v)
    if not tris:
        return (u, v)
    if len(tris) == 1:
        w = tris[0]
        # the cell is the triangle only if its other two edges are also
        # triangle-unique; otherwise restart from the crowded edge
        if len(_triangles_on(adj, u, w)) != 1:
            return _starting_cell(g, (u, w))
        if len(_triangles_on(adj, v, w)) != 1:
            return _starting_cell(g, (v, w))
        return (u, v, w)
    odd = [w for w in tris if _odd_triangle(adj, g.n, (u, v, w))]
    r, s = len(tris), len(odd)
    if r == 2 and s == 0:
        return (u, v, tris[0])
    if r - 1 <= s <= r:
        cell = {u, v, *odd}
        if len(cell) != s + 2:
            raise NotLineGraph("odd triangles do not form a complete subgraph")
        for a, b in combinations(sorted(cell), 2):
            if b not in adj[a]:
                raise NotLineGraph("odd triangles do not form a complete subgraph")
        return tuple(sorted(cell))
    raise NotLineGraph("wrong number of odd triangles around an edge")


def _krausz_partition(g: SimpleGraph):
    """Partition edges of a connected twin-free graph into cliques.

    Every vertex may lie in at most two cliques; raises NotLineGraph
    otherwise.
    """
    first = next(iter(g.edges()))
    cells = [_starting_cell(g, first)]
    remaining = {v: set(g.adj[v]) for v in range(g.n)}
    for a, b in combinations(cells[0], 2):
        remaining[a].discard(b)
        remaining[b].discard(a)
    pending = list(cells[0])
    while pending:
        u = pending[-1]
        if not remaining[u]:
            pending.pop()
            continue
        cell = [u] + sorted(remaining[u])
        for a, b in combinations(cell, 2):
            if b not in g.adj[a]:
                raise NotLineGraph("partition cell is not a clique")
        cells.append(tuple(cell))
        for a, b in combinations(cell, 2):
            remaining[a].discard(b)
            remaining[b].discard(a)
        pending.extend(cell)
    if any(remaining[v] for v in range(g.n)):
        # unreached edges mean the graph was disconnected
        raise InternalInconsistency("krausz partition ran on a disconnected graph")
    membership = {v: [] for v in range(g.n)}
    for idx, cell in enumerate(cells):
        for v in cell:
            membership[v].append(idx)
    if any(len(c) > 2 for c in membership.values()):
        raise NotLineGraph("a vertex lies in more than two partition cells")
    return cells, membership


def _root_connected_twinfree(g: SimpleGraph):
    """Root multigraph edge assignments for a connected twin-free graph.

    Returns (k, assignments) where k is the root vertex count and
    assignments[v] = (a, b) gives the root endpoints of line-vertex v.
    """
    if g.n == 1:
        return 2, {0: (0, 1)}
    cells, membership = _krausz_partition(g)
    next_id = len(cells)
    assignment = {}
    for v in range(g.n):
        cs = membership[v]
        if len(cs) == 2:
            assignment[v] = (cs[0], cs[1])
        else:
            assignment[v] = (cs[0], next_id)
            next_id += 1
    return next_id, assignment


def root_graph(g: SimpleGraph):
    """A multigraph whose line graph is isomorphic to g, with the witness map.

    Roots are not unique; any valid one is returned.  Raises NotLineGraph
    when none exists (e.g. for the claw).  The returned map sends each root
    edge id to the g-vertex it realizes.
    """
    if g.n == 0:
        return Multigraph(0, []), EdgeVertexMap({})
    classes = _twin_classes(g)
    reps = [cls[0] for cls in classes]
    reduced, keep = g.induced(reps)
    rep_index = {v: i for i, v in enumerate(keep)}

    offset = 0
    edge_endpoints = {}  # reduced vertex -> (a, b) in the combined root
    for comp in reduced.components():
        sub, back = reduced.induced(comp)
        k, assignment = _root_connected_twinfree(sub)
        for local_v, (a, b) in assignment.items():
            edge_endpoints[back[local_v]] = (a + offset, b + offset)
        offset += k

    edges = []
    edge_to_vertex = {}
    for cls in sorted(classes):
        a, b = edge_endpoints[rep_index[cls[0]]]
        # expand the twin class into parallel edges
        for v in cls:
            edge_to_vertex[len(edges)] = v
            edges.append((a, b))
    root = Multigraph(offset, edges)
    evmap = EdgeVertexMap(edge_to_vertex)
    _check_root(g, root, evmap)
    return root, evmap


def _check_root(g: SimpleGraph, root: Multigraph, evmap: EdgeVertexMap):
    built, _ = line_graph(root)
    relabeled = set()
    for e, f in built.edges():
        u, v = evmap.edge_to_vertex[e], evmap.edge_to_vertex[f]
        relabeled.add((u, v) if u < v else (v, u))
    if relabeled != set(g.edges()):
        raise NotLineGraph("krausz cover does not reproduce the graph")
