"""Every importable backend must agree with the pure-Python kernels."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from _strategies import graphs
from bellgraph import kernels
from bellgraph.graph import _allowed_masks, _twin_lower, refine_colours

BACKENDS = kernels.backends()
IDS = [b.BACKEND for b in BACKENDS]
REFERENCE = kernels.python_backend


def test_backend_selection():
    assert kernels.BACKEND in {"cython", "python"}
    assert kernels.active in BACKENDS
    assert BACKENDS[-1] is REFERENCE


@pytest.mark.parametrize("backend", BACKENDS, ids=IDS)
@given(p=graphs(max_n=5), h=graphs(max_n=9), natural=st.booleans(), limit=st.integers(0, 3))
def test_search_parity(backend, p, h, natural, limit):
    if p.n > h.n:
        return
    args = (list(p.rows), list(h.rows), h.n, _allowed_masks(p, h), list(range(p.n)) if natural else None, limit)
    assert backend.search_embeddings(*args) == REFERENCE.search_embeddings(*args)
    assert backend.search_embeddings(*args, True) == REFERENCE.search_embeddings(*args, True)


@pytest.mark.parametrize("backend", BACKENDS, ids=IDS)
@given(g=graphs(max_n=9))
def test_canonical_order_parity(backend, g):
    args = (list(g.rows), refine_colours(g), _twin_lower(g))
    assert backend.canonical_order(*args) == REFERENCE.canonical_order(*args)


@pytest.mark.parametrize("backend", BACKENDS, ids=IDS)
@given(g=graphs(max_n=6), data=st.data())
def test_pwh_search_parity(backend, g, data):
    a = data.draw(st.integers(1, 3))
    base = data.draw(st.lists(st.integers(0, a - 1), min_size=1, max_size=4))
    hadj = [0] * a
    for u in range(a):
        for v in range(u, a):
            if data.draw(st.booleans()):
                hadj[u] |= 1 << v
                hadj[v] |= 1 << u
    args = (list(g.rows), base, hadj)
    assert backend.pwh_search(*args) == REFERENCE.pwh_search(*args)


@pytest.mark.parametrize("backend", BACKENDS, ids=IDS)
def test_large_host_parity(backend):
    rng = random.Random(11)
    n = 64
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.3:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    prow = [0b110, 0b101, 0b011, 0]
    allowed = [(1 << n) - 1] * 4
    got = backend.search_embeddings(prow, rows, n, allowed, [0, 1, 2, 3], 50)
    assert got == REFERENCE.search_embeddings(prow, rows, n, allowed, [0, 1, 2, 3], 50)
    assert len(got) == 50
