import random

import numpy as np
from helpers import floyd_warshall

from oddhole import kernels
from oddhole.generators import complete, cycle, path_graph, petersen, random_graph
from oddhole.graphs import SimpleGraph
from oddhole.oddcycle import (
    CycleCertificate,
    apsp_two_next,
    find_c5,
    shortest_odd_cycle_ge5,
)
from oddhole.oracle import oracle_shortest_odd_cycle_ge5


def test_next_table_path():
    t = apsp_two_next(path_graph(3))
    assert t.dist[0, 2] == 2
    assert t.next_set(0, 2) == (1,)


def test_next_table_c4_two_hops():
    t = apsp_two_next(cycle(4))
    assert t.dist[0, 2] == 2
    assert t.next_set(0, 2) == (1, 3)


def test_next_table_petersen_unique_hops():
    pet = petersen()
    t = apsp_two_next(pet)
    for u in range(10):
        for w in range(10):
            if u != w and w not in pet.adj[u]:
                assert t.dist[u, w] == 2
                assert len(t.next_set(u, w)) == 1  # unique common neighbor


def test_next_table_invariants_random():
    rng = random.Random(8)
    for _ in range(30):
        g = random_graph(rng, rng.randint(2, 30), rng.uniform(0.05, 0.5))
        t = apsp_two_next(g)
        fw = floyd_warshall(g, kernels.INF)
        assert np.array_equal(np.minimum(t.dist, kernels.INF), fw)
        for u in range(g.n):
            for w in range(g.n):
                hops = t.next_set(u, w)
                valid = [
                    v
                    for v in g.neighbors[u]
                    if t.dist[v, w] + 1 == t.dist[u, w] and t.dist[u, w] < kernels.INF
                ]
                if len(valid) >= 2:
                    assert len(hops) == 2
                else:
                    assert list(hops) == valid
                for v in hops:
                    assert v in g.adj[u]
                    assert t.dist[v, w] == t.dist[u, w] - 1


def test_find_c5_named():
    assert find_c5(petersen()) is not None
    assert find_c5(cycle(7)) is None
    k5 = complete(5)
    cert = find_c5(k5)
    assert cert is not None
    cert.validate(k5)


def test_shortest_named():
    assert len(shortest_odd_cycle_ge5(cycle(7))) == 7
    assert len(shortest_odd_cycle_ge5(petersen())) == 5
    bip = SimpleGraph(6, [(0, 3), (0, 4), (1, 3), (1, 5), (2, 4), (2, 5)])
    assert shortest_odd_cycle_ge5(bip) is None


def test_shortest_matches_brute_random():
    rng = random.Random(12)
    for _ in range(250):
        g = random_graph(rng, rng.randint(4, 12), rng.uniform(0.1, 0.7))
        got = shortest_odd_cycle_ge5(g)
        want = oracle_shortest_odd_cycle_ge5(g)
        gl = None if got is None else len(got)
        assert gl == want, list(g.edges())
        if got is not None:
            got.validate(g)


def test_disconnected_components_handled():
    g = SimpleGraph(12, [(i, (i + 1) % 5) for i in range(5)] + [
        (5 + i, 5 + (i + 1) % 7) for i in range(7)
    ])
    cert = shortest_odd_cycle_ge5(g)
    assert len(cert) == 5


def test_cycle_certificate_rejects_bad():
    import pytest

    c5 = cycle(5)
    CycleCertificate((0, 1, 2, 3, 4)).validate(c5)
    with pytest.raises(ValueError):
        CycleCertificate((0, 1, 2, 3)).validate(c5)
    with pytest.raises(ValueError):
        CycleCertificate((0, 1, 2, 4, 3)).validate(c5)
