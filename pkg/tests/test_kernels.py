"""The compiled and pure kernels must agree on every input."""

import random

import pytest

from thompson_twist import _pykernels, kernels
from thompson_twist.sampling import random_dyadic, random_fmap, random_tlike

BACKENDS = kernels.available_backends()
py = _pykernels


def test_selected_backend_is_known():
    assert kernels.BACKEND in BACKENDS


@pytest.mark.skipif("cython" not in BACKENDS, reason="compiled kernels not built")
def test_cython_matches_python_on_random_workload():
    ck = BACKENDS["cython"]
    rng = random.Random(7)
    for _ in range(300):
        a = random_dyadic(rng, -50, 50, 9)
        b = random_dyadic(rng, -50, 50, 9)
        e = rng.randint(-20, 20)
        for name in ("add", "sub", "mul", "cmp"):
            assert getattr(ck, name)(*a.pair, *b.pair) == getattr(py, name)(*a.pair, *b.pair)
        assert ck.mul_pow2(*a.pair, e) == py.mul_pow2(*a.pair, e)
        assert ck.normalize(a.num << 5, a.exp + 5) == py.normalize(a.num << 5, a.exp + 5)

    for _ in range(100):
        f = random_fmap(rng)
        h = random_fmap(rng)
        args = (f._pts, f._slopes, f.l, f.r, h._pts, h._slopes, h.l, h.r)
        assert tuple(map(list, ck.compose_f(*args))) == tuple(map(list, py.compose_f(*args)))
        x = random_dyadic(rng, -12, 12, 6)
        assert ck.eval_f(f._pts, f._slopes, f.l, f.r, *x.pair) == py.eval_f(
            f._pts, f._slopes, f.l, f.r, *x.pair
        )
        g = random_tlike(rng)
        lo, hi = g._lo, g._hi
        assert ck.eval_periodic(g._pts, g._slopes, *lo, *hi, *x.pair) == py.eval_periodic(
            g._pts, g._slopes, *lo, *hi, *x.pair
        )
        a = random_dyadic(rng, -12, 0, 3)
        b = random_dyadic(rng, 0, 12, 3)
        assert ck.periodic_vertices(g._pts, *lo, *hi, *a.pair, *b.pair) == py.periodic_vertices(
            g._pts, *lo, *hi, *a.pair, *b.pair
        )
        assert ck.segment_slopes(f._pts) == py.segment_slopes(f._pts)


def test_log2_ratio():
    assert py.log2_ratio(3, 0, 3, 2) == 2
    assert py.log2_ratio(3, 0, 1, 0) is None
    assert py.log2_ratio(0, 0, 1, 0) is None


def test_prune_keeps_or_drops_ends():
    pts = [(0, 0, 0, 0), (1, 0, 1, 0), (2, 0, 3, 0), (3, 0, 4, 0)]
    slopes = py.segment_slopes(pts)
    assert slopes == [0, 1, 0]
    kept, s = py.prune(pts, slopes, True)
    assert kept == [(1, 0, 1, 0), (2, 0, 3, 0)] and s == [1]
    kept, s = py.prune(pts, slopes, False)
    assert kept == pts and s == slopes


def test_sort_unique():
    assert py.sort_unique([(1, 1), (0, 0), (1, 1), (-3, 0), (3, 2)]) == [(-3, 0), (0, 0), (1, 1), (3, 2)]
