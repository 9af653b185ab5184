"""Acceptance gate: one test per criterion, each printing a PASS line."""

import itertools
import math
import random
import time

import numpy as np
from helpers import connected_graphs_up_to, floyd_warshall

import oddhole.oddcycle as oddcycle_mod
from oddhole import kernels
from oddhole.cli import _bench_instance
from oddhole.decomposition import (
    StripDecomposition,
    decompose,
    decomposition_from_json,
    decomposition_to_json,
    verify_decomposition,
)
from oddhole.generators import (
    circulant,
    claw,
    cycle,
    gen_clawfree,
    icosahedron,
    petersen,
    plant_thickening,
    random_composition,
    random_graph,
    random_strip,
)
from oddhole.graphs import Multigraph, SimpleGraph
from oddhole.homogeneous import antithicken, find_nonlinear_hpc
from oddhole.linegraph import line_graph
from oddhole.oracle import (
    oracle_shortest_odd_cycle_ge5,
    oracle_shortest_odd_hole,
    oracle_spans,
)
from oddhole.oddcycle import apsp_two_next, shortest_odd_cycle_ge5
from oddhole.pipeline import shortest_odd_hole
from oddhole.strips import (
    Strip,
    longest_span,
    near_shortest_span,
    shortest_odd_span,
    shortest_span,
)


def test_criterion_1_oracle_equivalence():
    """1000 generated claw-free graphs, n <= 18, exact agreement, < 10 min."""
    start = time.perf_counter()
    total = 0
    for mode in ("line", "quasiline", "reject"):
        for seed in range(334):
            n = 5 + seed % 14
            g = gen_clawfree(seed, n, mode)
            assert g.n <= 18
            result = shortest_odd_hole(g)
            want = oracle_shortest_odd_hole(g)
            wl = None if want is None else len(want)
            assert result.length == wl, (mode, seed, n)
            if result.hole is not None:
                result.hole.validate(g)
            total += 1
    elapsed = time.perf_counter() - start
    assert total >= 1000
    assert elapsed < 600
    print(
        f"ACCEPTANCE 1 PASS: pipeline == oracle on {total} graphs "
        f"(line/quasiline/reject, n<=18) in {elapsed:.1f}s"
    )


def test_criterion_2_named_instances():
    k4 = SimpleGraph(4, list(itertools.combinations(range(4), 2)))
    lk4, _ = line_graph(Multigraph(4, list(k4.edges())))
    lpet, _ = line_graph(Multigraph(10, list(petersen().edges())))
    expectations = [
        ("C5", cycle(5), 5),
        ("C7", cycle(7), 7),
        ("C9", cycle(9), 9),
        ("C9(1,2)", circulant(9, (1, 2)), 5),
        ("icosahedron", icosahedron(), 5),
        ("L(Petersen)", lpet, 5),
        ("complement-of-C7", cycle(7).complement(), None),
        ("L(K4)", lk4, None),
    ]
    for name, g, want in expectations:
        result = shortest_odd_hole(g)
        assert result.kind in ("hole", "none"), name
        assert result.length == want, name
    result = shortest_odd_hole(claw())
    assert result.kind == "not-claw-free"
    print("ACCEPTANCE 2 PASS: all 9 named instances answered exactly")


def test_criterion_3_span_suite():
    checked = 0
    for seed in range(500):
        k = 1 + seed % 14
        g, strip = random_strip(seed, k)
        lengths = oracle_spans(strip)
        p = shortest_span(strip)
        assert len(p) == min(lengths)
        odd = shortest_odd_span(strip)
        odd_expected = sorted({x for x in lengths if x in (min(lengths), min(lengths) + 1)})
        if k > 1:
            q = longest_span(strip)
            assert len(q) == max(lengths)
            near = near_shortest_span(strip)
            if len(set(lengths)) > 1:
                assert near is not None and len(near) == min(lengths) + 1
            else:
                assert near is None
        if min(lengths) % 2 == 1:
            assert odd is not None and len(odd) == min(lengths)
        elif len(set(lengths)) > 1:
            assert odd is not None and len(odd) == min(lengths) + 1
        else:
            assert odd is None
        checked += 1
    assert checked == 500
    print(f"ACCEPTANCE 3 PASS: span ops match the exhaustive oracle on {checked} strips")


def test_criterion_4_odd_cycle_suite():
    raises = 0
    original = oddcycle_mod._reconstruct

    def counting(*args, **kwargs):
        nonlocal raises
        try:
            return original(*args, **kwargs)
        except Exception:
            raises += 1
            raise

    oddcycle_mod._reconstruct = counting
    try:
        levels = connected_graphs_up_to(8)
        exhaustive = 0
        for n in range(1, 9):
            for g in levels[n]:
                got = shortest_odd_cycle_ge5(g)
                want = oracle_shortest_odd_cycle_ge5(g)
                gl = None if got is None else len(got)
                assert gl == want, list(g.edges())
                exhaustive += 1
        rng = random.Random(1234)
        for _ in range(500):
            g = random_graph(rng, rng.randint(4, 12), rng.uniform(0.1, 0.7))
            got = shortest_odd_cycle_ge5(g)
            want = oracle_shortest_odd_cycle_ge5(g)
            gl = None if got is None else len(got)
            assert gl == want, list(g.edges())
    finally:
        oddcycle_mod._reconstruct = original
    assert raises == 0
    print(
        f"ACCEPTANCE 4 PASS: odd-cycle search matches brute force on "
        f"{exhaustive} exhaustive (<=8) + 500 random (<=12) graphs; "
        f"reconstruction inconsistency fired {raises} times"
    )


def test_criterion_5_antithickening():
    for seed in range(300):
        n = 12 + seed % 7
        g, _ = plant_thickening(seed, n)
        assert g.n <= 18
        assert find_nonlinear_hpc(g) is not None
        reduced = antithicken(g)
        reduced.validate(g)
        assert find_nonlinear_hpc(reduced.graph) is None
        before = oracle_shortest_odd_hole(g)
        after = oracle_shortest_odd_hole(reduced.graph)
        bl = None if before is None else len(before)
        al = None if after is None else len(after)
        assert bl == al, seed
    print(
        "ACCEPTANCE 5 PASS: 300 planted thickenings reduced; hole lengths "
        "preserved and outputs certified pair-free"
    )


def _corrupt(base_g, base_d, kind):
    """Return a deliberately broken copy of a valid decomposition."""
    h = base_d.h
    strips = dict(base_d.strips)
    big = max(strips, key=lambda e: len(strips[e].order))
    s = strips[big]
    if kind == 0 and len(s.order) > 1:  # drop a strip vertex
        strips[big] = Strip(base_g, s.order[1:], s.x - {s.order[0]} or {s.order[1]}, s.y)
        return StripDecomposition(h, strips)
    if kind == 1 and len(s.order) > 1:  # scramble the order
        order = (s.order[-1],) + s.order[1:-1] + (s.order[0],)
        strips[big] = Strip(base_g, order, s.x, s.y)
        return StripDecomposition(h, strips)
    if kind == 2:  # duplicate a vertex across strips
        other = min(e for e in strips if e != big)
        o = strips[other]
        strips[other] = Strip(base_g, o.order + (s.order[0],), o.x, o.y)
        return StripDecomposition(h, strips)
    if kind == 3 and len(s.order) > 1:  # inflate X beyond the prefix
        strips[big] = Strip(base_g, s.order, s.x | {s.order[-1]}, s.y)
        return StripDecomposition(h, strips)
    if kind == 4:  # rewire an H edge to a different hub
        edges = [(a, b) for _, a, b in h.edges]
        a, b = edges[big]
        edges[big] = (a, (b + 1) % h.n) if h.n > 1 else (a, b)
        return StripDecomposition(Multigraph(h.n, edges), strips)
    if kind == 5:  # empty an end-clique
        strips[big] = Strip(base_g, s.order, set(), s.y)
        return StripDecomposition(h, strips)
    return None


def test_criterion_6_decomposition_verifier():
    corpus = []
    for seed in range(12):
        g, d = random_composition(seed, 12 + seed % 5)
        ok, why = verify_decomposition(g, d)
        assert ok, why
        corpus.append((g, d))
        again = decomposition_from_json(decomposition_to_json(d), g)
        ok, why = verify_decomposition(g, again)
        assert ok, why
        for comp in g.components():
            sub, _ = g.induced(comp)
            out = decompose(sub)
            if isinstance(out, StripDecomposition):
                ok, why = verify_decomposition(sub, out)
                assert ok, why
                corpus.append((sub, out))
    rejected = 0
    trial = 0
    while rejected < 20:
        g, d = corpus[trial % len(corpus)]
        bad = _corrupt(g, d, trial % 6)
        trial += 1
        if bad is None:
            continue
        ok, why = verify_decomposition(g, bad)
        assert not ok and why, f"corruption {trial} slipped through"
        rejected += 1
    print(
        f"ACCEPTANCE 6 PASS: {len(corpus)} decompositions verified exactly; "
        f"{rejected} corrupted variants all rejected with reports"
    )


def test_criterion_7_scaling():
    sizes = (2000, 4000, 8000, 16000)
    # warm the jit compilation off the clock
    shortest_odd_hole(_bench_instance("line", 120, 0))
    points = []
    for size in sizes:
        g = _bench_instance("line", size, 0)
        t0 = time.perf_counter()
        result = shortest_odd_hole(g)
        elapsed = time.perf_counter() - t0
        assert result.kind in ("hole", "none")
        assert elapsed < 120, f"size {size} took {elapsed:.1f}s"
        points.append((g.m, elapsed))
    xs = [math.log(m) for m, _ in points]
    ys = [math.log(max(t, 1e-9)) for _, t in points]
    mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
    slope = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum(
        (x - mx) ** 2 for x in xs
    )
    assert slope <= 2.4, f"fitted exponent {slope:.2f}"
    times = ", ".join(f"m={m}: {t:.2f}s" for m, t in points)
    print(f"ACCEPTANCE 7 PASS: {times}; fitted exponent {slope:.2f} <= 2.4")


def test_criterion_8_two_next_apsp():
    rng = random.Random(88)
    doubles = 0
    for _ in range(100):
        g = random_graph(rng, rng.randint(2, 50), rng.uniform(0.04, 0.3))
        table = apsp_two_next(g)
        fw = floyd_warshall(g, kernels.INF)
        assert np.array_equal(np.minimum(table.dist, kernels.INF), fw)
        assert np.all(table.dist == table.dist.T)
        assert all(table.dist[v, v] == 0 for v in range(g.n))
        for u in range(g.n):
            for w in range(g.n):
                hops = table.next_set(u, w)
                valid = [
                    v
                    for v in g.neighbors[u]
                    if table.dist[u, w] < kernels.INF
                    and table.dist[v, w] + 1 == table.dist[u, w]
                ]
                if len(valid) >= 2:
                    assert len(hops) == 2
                    doubles += 1
                else:
                    assert list(hops) == valid
                for v in hops:
                    assert v in g.adj[u] and table.dist[v, w] == table.dist[u, w] - 1
    assert doubles > 0
    print(
        f"ACCEPTANCE 8 PASS: NextTable matches Floyd-Warshall on 100 graphs; "
        f"{doubles} pairs stored two first hops"
    )
