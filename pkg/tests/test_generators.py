import pytest

from oddhole import generators
from oddhole.decomposition import verify_decomposition
from oddhole.errors import GenerationExhausted
from oddhole.generators import (
    gen_clawfree,
    icosahedron,
    petersen,
    random_composition,
    random_cubic,
    random_strip,
)
from oddhole.graphs import SimpleGraph
from oddhole.oracle import oracle_find_claw


def test_gen_deterministic():
    for mode in ("line", "quasiline", "reject"):
        a = gen_clawfree(5, 11, mode)
        b = gen_clawfree(5, 11, mode)
        assert a == b
    assert gen_clawfree(5, 11, "line") != gen_clawfree(6, 11, "line")


def test_gen_clawfree_all_modes():
    for mode in ("line", "quasiline", "reject"):
        for seed in range(12):
            g = gen_clawfree(seed, 9 + seed % 8, mode)
            assert oracle_find_claw(g) is None


def test_gen_rejects_bad_mode():
    with pytest.raises(ValueError):
        gen_clawfree(0, 5, "nope")


def test_gen_exhaustion(monkeypatch):
    monkeypatch.setattr(
        "oddhole.oracle.oracle_find_claw", lambda g: (0, 1, 2, 3)
    )
    with pytest.raises(GenerationExhausted):
        gen_clawfree(0, 6, "reject")


def test_quasiline_sizes_exact():
    for seed in range(10):
        n = 8 + seed
        assert gen_clawfree(seed, n, "quasiline").n == n


def test_generated_instances_serialize_roundtrip():
    from oddhole.graphs import parse_graph, serialize_dimacs, serialize_json

    for mode in ("line", "quasiline", "reject"):
        g = gen_clawfree(2, 10, mode)
        assert parse_graph(serialize_dimacs(g)) == g
        assert parse_graph(serialize_json(g)) == g


def test_random_strip_valid():
    for seed in range(40):
        k = 1 + seed % 12
        g, s = random_strip(seed, k)
        s.validate()
        assert g.is_connected()


def test_random_composition_ground_truth():
    for seed in range(25):
        g, d = random_composition(seed, 11 + seed % 7)
        ok, why = verify_decomposition(g, d)
        assert ok, why


def test_random_cubic():
    rng = generators._rng(1, "t")
    h = random_cubic(rng, 20)
    degs = [0] * 20
    for _, a, b in h.edges:
        degs[a] += 1
        degs[b] += 1
    assert all(d == 3 for d in degs)
    simple = SimpleGraph(20, [(a, b) for _, a, b in h.edges])
    assert simple.is_connected()
    with pytest.raises(ValueError):
        random_cubic(rng, 7)


def test_named_graphs():
    pet = petersen()
    assert pet.n == 10 and pet.m == 15
    assert all(pet.degree(v) == 3 for v in range(10))
    ico = icosahedron()
    assert ico.n == 12 and ico.m == 30
    assert all(ico.degree(v) == 5 for v in range(12))
    # every icosahedron neighborhood induces a 5-cycle
    for v in range(12):
        sub, _ = ico.induced(ico.neighbors[v])
        assert sub.n == 5 and sub.m == 5 and all(sub.degree(u) == 2 for u in range(5))
