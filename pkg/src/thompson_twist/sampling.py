"""Random elements for property tests, the benchmark and the demo.

Maps are built from standard dyadic subdivisions: an interval
``[m/2^k, (m+1)/2^k]`` sent affinely onto another such interval has slope
a power of 2, so pairing two subdivisions with the same number of pieces
always gives a valid piecewise-linear map.
"""

import random

from .dyadic import Dyadic
from .groupf import REV, AutWord, ConjBy
from .plmap import validate_f, validate_tlike

__all__ = [
    "random_dyadic",
    "dyadic_pieces",
    "random_pl_between",
    "random_fmap",
    "random_tlike",
    "random_autword",
]


def random_dyadic(rng, lo=-8, hi=8, depth=4):
    """Uniform on the grid ``2^-depth Z`` inside ``[lo, hi]``."""
    scale = 1 << depth
    return Dyadic(rng.randint(lo * scale, hi * scale), depth)


def dyadic_pieces(a, b):
    """Greedy split of ``[a, b]`` into standard dyadic intervals."""
    out = [a]
    p = a
    while p < b:
        # largest 2^e with p a multiple of 2^e and p + 2^e <= b
        e = -p.exp if p.num else (b - p).floor().bit_length()
        step = Dyadic(1).mul_pow2(e)
        while p + step > b:
            step = step.mul_pow2(-1)
        p = p + step
        out.append(p)
    return out


def _split(rng, pts, count):
    pts = list(pts)
    for _ in range(count):
        i = rng.randrange(len(pts) - 1)
        mid = (pts[i] + pts[i + 1]).mul_pow2(-1)
        pts.insert(i + 1, mid)
    return pts


def random_pl_between(rng, a, b, c, d, extra=3):
    """Vertices of a random increasing PL map ``[a, b] -> [c, d]`` with power-of-2 slopes."""
    xs = dyadic_pieces(a, b)
    ys = dyadic_pieces(c, d)
    if len(xs) < len(ys):
        xs = _split(rng, xs, len(ys) - len(xs))
    elif len(ys) < len(xs):
        ys = _split(rng, ys, len(xs) - len(ys))
    k = rng.randint(0, extra)
    xs = _split(rng, xs, k)
    ys = _split(rng, ys, k)
    return list(zip(xs, ys))


def random_fmap(rng, window=8, max_breaks=12, max_tail=3, depth=3):
    """Random element of F with breaks inside ``[-window, window]``.

    Rejection-samples until the canonical form has at most ``max_breaks``
    vertices.
    """
    while True:
        l = rng.randint(-max_tail, max_tail)
        r = rng.randint(-max_tail, max_tail)
        if rng.random() < 0.1:
            return validate_f([], l, l)
        x1 = random_dyadic(rng, -window, window - 1, depth)
        x2 = random_dyadic(rng, -window, window, depth)
        if x2 <= x1:
            continue
        y1, y2 = x1 + l, x2 + r
        if y2 <= y1:
            continue
        verts = random_pl_between(rng, x1, x2, y1, y2, extra=rng.randint(0, 3))
        if len(verts) > max_breaks + 6:
            continue
        f = validate_f(verts, l, r)
        if len(f.breaks) <= max_breaks:
            return f


def random_tlike(rng, window=8, max_breaks=12, depth=2):
    """Random eventually T-like map with anchors in ``[-window/2, window/2]``.

    The core (at most ``max_breaks`` vertices) then lies inside the window.
    """
    half = max(1, window // 2)
    while True:
        L = -random_dyadic(rng, 0, half - 1, depth)
        R = random_dyadic(rng, 0, half - 1, depth)
        base = random_dyadic(rng, -2, 2, depth)
        # g(L) = base; g(R) = base + R - L + shift
        gap = R - L
        if gap:
            top = base + gap + random_dyadic(rng, -1, 1, depth)
            if top <= base:
                continue
        else:
            top = base
        left = random_pl_between(rng, L - 1, L, base - 1, base, extra=1)
        mid = random_pl_between(rng, L, R, base, top, extra=1) if gap else [(L, base)]
        right = random_pl_between(rng, R, R + 1, top, top + 1, extra=1)
        verts = left[:-1] + mid[:-1] + right
        if len(verts) > max_breaks + 6:
            continue
        g = validate_tlike(L, R, verts)
        if len(g.core) <= max_breaks:
            return g


def random_autword(rng, max_len=6, p_rev=0.5, **tlike_kw):
    n = rng.randint(0, max_len)
    factors = []
    for _ in range(n):
        if rng.random() < p_rev:
            factors.append(REV)
        else:
            factors.append(ConjBy(random_tlike(rng, **tlike_kw)))
    return AutWord(tuple(factors))


def make_rng(seed):
    return random.Random(seed)
