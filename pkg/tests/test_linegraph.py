import random

import pytest
from helpers import are_isomorphic

from oddhole.errors import NotLineGraph
from oddhole.generators import claw, cycle, petersen
from oddhole.graphs import Multigraph, SimpleGraph
from oddhole.linegraph import line_graph, root_graph


def test_line_graph_path():
    g, _ = line_graph(Multigraph(3, [(0, 1), (1, 2)]))
    assert g.n == 2 and g.m == 1


def test_line_graph_cycle_fixed_point():
    g, _ = line_graph(Multigraph(5, [(i, (i + 1) % 5) for i in range(5)]))
    assert are_isomorphic(g, cycle(5))


def test_line_graph_parallel_edges():
    g, _ = line_graph(Multigraph(2, [(0, 1), (0, 1)]))
    assert g.n == 2 and g.m == 1


def test_line_graph_loops_share_their_vertex():
    # a loop is adjacent to every edge at its vertex, two loops to each other
    g, _ = line_graph(Multigraph(2, [(0, 0), (0, 0), (0, 1)]))
    assert g.m == 3  # triangle


def test_root_of_c5():
    root, _ = root_graph(cycle(5))
    assert root.n == 5 and root.m == 5


def test_root_rejects_claw():
    with pytest.raises(NotLineGraph):
        root_graph(claw())


def test_root_of_line_of_petersen():
    pet = petersen()
    lg, _ = line_graph(Multigraph(10, list(pet.edges())))
    root, ev = root_graph(lg)
    assert root.m == lg.n
    simple = SimpleGraph(root.n, [(a, b) for _, a, b in root.edges])
    assert are_isomorphic(simple, pet)


def _random_multigraph(rng, m_edges):
    n = rng.randint(1, max(2, m_edges))
    edges = []
    for _ in range(m_edges):
        a = rng.randrange(n)
        b = rng.randrange(n) if rng.random() > 0.1 else a
        edges.append((a, b))
    return Multigraph(n, edges)


def test_root_roundtrip_small_multigraphs():
    # any multigraph with at most 10 edges: root(line(h)) reproduces line(h)
    rng = random.Random(42)
    for _ in range(250):
        h = _random_multigraph(rng, rng.randint(1, 10))
        g, _ = line_graph(h)
        root, ev = root_graph(g)
        rebuilt, _ = line_graph(root)
        relabeled = set()
        for e, f in rebuilt.edges():
            u, v = ev.edge_to_vertex[e], ev.edge_to_vertex[f]
            relabeled.add((u, v) if u < v else (v, u))
        assert relabeled == set(g.edges())
        assert are_isomorphic(rebuilt, g)


def test_root_rejects_non_line_graphs():
    wheel5 = SimpleGraph(
        6, [(i, (i + 1) % 5) for i in range(5)] + [(5, i) for i in range(5)]
    )
    with pytest.raises(NotLineGraph):
        root_graph(wheel5)
