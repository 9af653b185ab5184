import random

import numpy as np
import pytest

from oddhole import kernels
from oddhole.generators import random_graph


needs_numba = pytest.mark.skipif(not kernels._HAVE_NUMBA, reason="numba unavailable")


@pytest.fixture
def restore_backend():
    yield
    kernels.set_backend(True)


@needs_numba
def test_backends_produce_identical_tables(restore_backend):
    rng = random.Random(77)
    for _ in range(25):
        g = random_graph(rng, rng.randint(2, 40), rng.uniform(0.05, 0.4))
        kernels.set_backend(True)
        d1 = kernels.bfs_all_pairs(g)
        n1a, n1b = kernels.two_next(g, d1)
        c1 = kernels.odd_cycle_candidate(g, d1, n1a, n1b)
        kernels.set_backend(False)
        d2 = kernels.bfs_all_pairs(g)
        n2a, n2b = kernels.two_next(g, d2)
        c2 = kernels.odd_cycle_candidate(g, d2, n2a, n2b)
        assert np.array_equal(d1, d2)
        assert np.array_equal(n1a, n2a)
        assert np.array_equal(n1b, n2b)
        assert c1 == c2


def test_env_flag_reports_backend():
    assert kernels.using_numba() == (kernels.USE_NUMBA and kernels._HAVE_NUMBA)


@needs_numba
def test_set_backend_roundtrip(restore_backend):
    kernels.set_backend(False)
    assert not kernels.using_numba()
    kernels.set_backend(True)
    assert kernels.using_numba()


def test_csr_arrays_sorted():
    rng = random.Random(5)
    g = random_graph(rng, 12, 0.4)
    indptr, indices = kernels.csr_arrays(g)
    for v in range(g.n):
        row = list(indices[indptr[v] : indptr[v + 1]])
        assert row == sorted(g.adj[v])
