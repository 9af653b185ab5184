import itertools

import pytest
from helpers import are_isomorphic

from oddhole.decomposition import (
    CircularInterval,
    StripDecomposition,
    decompose,
    decomposition_from_json,
    decomposition_to_json,
    span_summary,
    verify_decomposition,
)
from oddhole.errors import DecompositionFailed
from oddhole.generators import (
    compose_strips,
    cycle,
    petersen,
    random_composition,
    random_strip,
)
from oddhole.graphs import Multigraph, SimpleGraph
from oddhole.linegraph import line_graph
from oddhole.strips import Strip


def l_of(simple):
    g, _ = line_graph(Multigraph(simple.n, list(simple.edges())))
    return g


def k4():
    return SimpleGraph(4, list(itertools.combinations(range(4), 2)))


def singleton_decomposition_of_line(simple):
    base = Multigraph(simple.n, list(simple.edges()))
    g, _ = line_graph(base)
    strips = {eid: Strip(g, (eid,), {eid}, {eid}) for eid in range(base.m)}
    return g, StripDecomposition(base, strips)


def test_verify_l_k4_singletons():
    g, d = singleton_decomposition_of_line(k4())
    ok, why = verify_decomposition(g, d)
    assert ok, why


def test_verify_rejects_broken_hub():
    g, d = singleton_decomposition_of_line(k4())
    # drop one strip's X from its hub by reassigning the edge elsewhere
    edges = list(d.h.edges)
    eid, a, b = edges[0]
    edges[0] = (eid, a, 3 if b != 3 else 2)
    bad = StripDecomposition(Multigraph(d.h.n, [(x, y) for _, x, y in edges]), d.strips)
    ok, why = verify_decomposition(g, bad)
    assert not ok and why


def test_verify_rejects_clique_strip():
    # a non-singleton strip that is a clique violates the shape rule
    g = SimpleGraph(3, [(0, 1), (1, 2), (0, 2)])
    h = Multigraph(2, [(0, 1)])
    d = StripDecomposition(h, {0: Strip(g, (0, 1, 2), {0}, {2})})
    ok, why = verify_decomposition(g, d)
    assert not ok and "clique" in why


def test_verify_rejects_vertex_overlap_and_gaps():
    g, d = singleton_decomposition_of_line(k4())
    strips = dict(d.strips)
    strips[0] = Strip(g, (1,), {1}, {1})  # duplicates vertex 1, misses 0
    ok, why = verify_decomposition(g, StripDecomposition(d.h, strips))
    assert not ok


def test_decompose_cycle_is_circular():
    assert isinstance(decompose(cycle(7)), CircularInterval)


def test_decompose_l_k4():
    g = l_of(k4())
    out = decompose(g)
    if isinstance(out, StripDecomposition):
        ok, why = verify_decomposition(g, out)
        assert ok, why
    else:
        assert isinstance(out, CircularInterval)


def test_decompose_l_petersen_all_singletons():
    g = l_of(petersen())
    out = decompose(g)
    assert isinstance(out, StripDecomposition)
    ok, why = verify_decomposition(g, out)
    assert ok, why
    assert all(s.is_singleton() for s in out.strips.values())
    skeleton = SimpleGraph(out.h.n, [(a, b) for _, a, b in out.h.edges])
    assert are_isomorphic(skeleton, petersen())


def test_decompose_compositions_and_reverify():
    for seed in range(40):
        g, _ = random_composition(seed, 12 + seed % 6)
        for comp in g.components():
            sub, _ = g.induced(comp)
            out = decompose(sub)
            if isinstance(out, StripDecomposition):
                ok, why = verify_decomposition(sub, out)
                assert ok, why


def test_decompose_refuses_garbage():
    from oddhole.generators import claw

    with pytest.raises(DecompositionFailed):
        decompose(claw(), try_circular=True)


def test_span_summary_all_singletons():
    g, d = singleton_decomposition_of_line(k4())
    s = span_summary(d)
    assert all(length == 1 for length in s.lengths.values())
    assert s.eplus == frozenset()


def test_span_summary_mixed():
    sg, strip = random_strip(0, 1)
    pet_g = SimpleGraph(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (2, 4)])
    pet_strip = Strip(pet_g, (0, 1, 2, 3, 4), {0}, {4})
    path_g = SimpleGraph(4, [(0, 1), (1, 2), (2, 3)])
    path_strip = Strip(path_g, (0, 1, 2, 3), {0}, {3})
    g, d = compose_strips(
        2,
        [(0, 1), (0, 1), (0, 1)],
        [(sg, strip), (pet_g, pet_strip), (path_g, path_strip)],
    )
    ok, why = verify_decomposition(g, d)
    assert ok, why
    s = span_summary(d)
    assert s.lengths == {0: 1, 1: 3, 2: 4}
    assert s.eplus == frozenset({1})
    assert len(s.near[1]) == 4 and s.near[2] is None


def test_json_roundtrip_and_ingestion():
    g, _ = random_composition(5, 13)
    comp = g.components()[0]
    sub, _ = g.induced(comp)
    out = decompose(sub)
    if not isinstance(out, StripDecomposition):
        g, d0 = singleton_decomposition_of_line(k4())
        sub, out = g, d0
    text = decomposition_to_json(out)
    again = decomposition_from_json(text, sub)
    ok, why = verify_decomposition(sub, again)
    assert ok, why
    assert decomposition_to_json(again) == text


def test_hub_membership_at_most_two():
    for seed in range(20):
        g, d = random_composition(seed, 14)
        counts = {v: 0 for v in range(g.n)}
        for hub, members in d.hub_cliques().items():
            for v in members:
                counts[v] += 1
        assert all(c <= 2 for c in counts.values())


def test_loop_decomposition_verifies():
    # one loop whose strip composes into a C5
    path_g = SimpleGraph(5, [(i, i + 1) for i in range(4)])
    strip = Strip(path_g, (0, 1, 2, 3, 4), {0}, {4})
    g, d = compose_strips(1, [(0, 0)], [(path_g, strip)])
    assert g.m == 5  # the hub closes the path into a cycle
    ok, why = verify_decomposition(g, d)
    assert ok, why
