"""Piecewise-linear homeomorphisms of the real line.

Two kinds of map live here:

* :class:`FMap`, an element of Thompson's group F: finitely many vertices
  with power-of-2 slopes between them and integer translations outside.
* :class:`TLikeMap`, an eventually T-like homeomorphism: a finite core on
  ``[L-1, R+1]`` that repeats with period (1, 1) to the left of ``L-1``
  and to the right of ``R``.

Both are immutable; all operations return new canonical objects, so
structural equality is equality of maps.
"""

from . import kernels as _k
from .dyadic import Dyadic, as_dyadic
from .errors import (
    BadSlope,
    FormatError,
    NonMonotone,
    PeriodSeedMismatch,
    TailMismatch,
)

__all__ = [
    "FMap",
    "TLikeMap",
    "validate_f",
    "validate_tlike",
    "eval_f",
    "eval_tlike",
    "compose_f",
    "invert_f",
    "invert_tlike",
    "canonicalize",
    "embed_f_as_tlike",
    "translational_parts",
    "variation",
    "translation",
    "identity_f",
    "identity_tlike",
    "fmap_to_json",
    "fmap_from_json",
    "tlike_to_json",
    "tlike_from_json",
    "element_from_json",
]


def _dy(pair):
    return Dyadic._raw(pair[0], pair[1])


def _raw_points(breaks):
    pts = []
    for item in breaks:
        if isinstance(item, dict):
            try:
                x, y = item["x"], item["y"]
            except KeyError as exc:
                raise FormatError(f"vertex missing key {exc}") from None
        else:
            x, y = item
        x, y = as_dyadic(x), as_dyadic(y)
        pts.append((x.num, x.exp, y.num, y.exp))
    return pts


def _check_monotone(pts):
    for i in range(len(pts) - 1):
        a, b = pts[i], pts[i + 1]
        if _k.cmp(a[0], a[1], b[0], b[1]) >= 0:
            raise NonMonotone(f"x-coordinates not strictly increasing at vertex {i + 1}")
        if _k.cmp(a[2], a[3], b[2], b[3]) >= 0:
            raise NonMonotone(f"map is not increasing on segment {i}")


def _checked_slopes(pts):
    slopes = _k.segment_slopes(pts)
    for i, s in enumerate(slopes):
        if s is None:
            a, b = pts[i], pts[i + 1]
            raise BadSlope(
                f"slope on [{_dy(a[:2])}, {_dy(b[:2])}] is not a power of 2"
            )
    return slopes


class FMap:
    """An element of Thompson's group F.

    ``l`` and ``r`` are the translation amounts near minus and plus
    infinity.  Build instances with :func:`validate_f`; the constructor
    trusts its arguments.
    """

    __slots__ = ("_pts", "_slopes", "l", "r")

    def __init__(self, pts, slopes, l, r):
        object.__setattr__(self, "_pts", tuple(pts))
        object.__setattr__(self, "_slopes", tuple(slopes))
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "r", r)

    def __setattr__(self, name, value):
        raise AttributeError("FMap is immutable")

    @property
    def breaks(self):
        return tuple((_dy(p[:2]), _dy(p[2:])) for p in self._pts)

    @property
    def slope_exponents(self):
        return self._slopes

    def __call__(self, x):
        x = as_dyadic(x)
        return _dy(_k.eval_f(self._pts, self._slopes, self.l, self.r, x.num, x.exp))

    def __mul__(self, other):
        """``f * h`` is the composite ``f o h``."""
        if not isinstance(other, FMap):
            return NotImplemented
        return compose_f(self, other)

    def inverse(self):
        return invert_f(self)

    def __eq__(self, other):
        if not isinstance(other, FMap):
            return NotImplemented
        return self.l == other.l and self.r == other.r and self._pts == other._pts

    def __hash__(self):
        return hash((self.l, self.r, self._pts))

    def __repr__(self):
        inner = ", ".join(f"({x}, {y})" for x, y in self.breaks)
        return f"FMap(l={self.l}, r={self.r}, breaks=[{inner}])"

    def is_identity(self):
        return not self._pts and self.l == 0

    @property
    def first_x(self):
        return _dy(self._pts[0][:2]) if self._pts else None

    @property
    def last_x(self):
        return _dy(self._pts[-1][:2]) if self._pts else None


class TLikeMap:
    """An eventually T-like homeomorphism of the real line.

    ``core`` holds the vertices over ``[L-1, R+1]`` (both ends included);
    outside ``(L-1, R)`` the map satisfies ``g(x+1) = g(x) + 1``.  Anchors
    are stored as given, not minimized.
    """

    __slots__ = ("L", "R", "_pts", "_slopes")

    def __init__(self, L, R, pts, slopes):
        object.__setattr__(self, "L", L)
        object.__setattr__(self, "R", R)
        object.__setattr__(self, "_pts", tuple(pts))
        object.__setattr__(self, "_slopes", tuple(slopes))

    def __setattr__(self, name, value):
        raise AttributeError("TLikeMap is immutable")

    @property
    def core(self):
        return tuple((_dy(p[:2]), _dy(p[2:])) for p in self._pts)

    @property
    def _lo(self):
        # left periodic region is x <= L - 1
        return (self.L - 1).pair

    @property
    def _hi(self):
        return self.R.pair

    def __call__(self, x):
        x = as_dyadic(x)
        lo, hi = self._lo, self._hi
        return _dy(
            _k.eval_periodic(self._pts, self._slopes, lo[0], lo[1], hi[0], hi[1], x.num, x.exp)
        )

    def inverse(self):
        return invert_tlike(self)

    def vertices_in(self, a, b):
        """Every x in ``[a, b]`` where the slope may change, plus a and b."""
        a, b = as_dyadic(a), as_dyadic(b)
        lo, hi = self._lo, self._hi
        return [
            _dy(v)
            for v in _k.periodic_vertices(
                self._pts, lo[0], lo[1], hi[0], hi[1], a.num, a.exp, b.num, b.exp
            )
        ]

    def __eq__(self, other):
        if not isinstance(other, TLikeMap):
            return NotImplemented
        return self.L == other.L and self.R == other.R and self._pts == other._pts

    def __hash__(self):
        return hash((self.L, self.R, self._pts))

    def __repr__(self):
        inner = ", ".join(f"({x}, {y})" for x, y in self.core)
        return f"TLikeMap(L={self.L}, R={self.R}, core=[{inner}])"


# -- construction and validation ---------------------------------------------


def canonicalize(breaks, tails=True):
    """Remove vertices whose incoming and outgoing slopes agree.

    ``breaks`` is a monotone list of ``(x, y)`` pairs with power-of-2
    slopes.  With ``tails`` the ends meet slope-1 tails (the F case);
    otherwise the two end vertices are kept.

    >>> canonicalize([(0, 0), (Dyadic(1, 1), 1), (1, 2)])
    [(Dyadic('0'), Dyadic('0')), (Dyadic('1'), Dyadic('2'))]
    """
    pts = _raw_points(breaks)
    _check_monotone(pts)
    slopes = _checked_slopes(pts)
    kept, _ = _k.prune(pts, slopes, tails)
    return [(_dy(p[:2]), _dy(p[2:])) for p in kept]


def validate_f(breaks, l, r):
    """Check the F conditions and return the canonical :class:`FMap`.

    >>> validate_f([(0, 0), (1, 2)], 0, 1)
    FMap(l=0, r=1, breaks=[(0, 0), (1, 2)])
    """
    if isinstance(l, bool) or isinstance(r, bool) or not isinstance(l, int) or not isinstance(r, int):
        raise TailMismatch("translation tails must be integers")
    pts = _raw_points(breaks)
    if not pts:
        if l != r:
            raise TailMismatch(f"no vertices but tails differ ({l} != {r})")
        return FMap((), (), l, r)
    _check_monotone(pts)
    slopes = _checked_slopes(pts)
    x0n, x0k, y0n, y0k = pts[0]
    if _k.add(x0n, x0k, l, 0) != (y0n, y0k):
        raise TailMismatch(f"first vertex does not lie on y = x + {l}")
    xnn, xnk, ynn, ynk = pts[-1]
    if _k.add(xnn, xnk, r, 0) != (ynn, ynk):
        raise TailMismatch(f"last vertex does not lie on y = x + {r}")
    kept, kept_slopes = _k.prune(pts, slopes, True)
    return FMap(kept, kept_slopes, l, r)


def validate_tlike(L, R, core):
    """Check the eventually T-like conditions and return the canonical map.

    The core must run from ``x = L-1`` to ``x = R+1`` and satisfy
    ``g(L) = g(L-1) + 1`` and ``g(R+1) = g(R) + 1``; those two equations
    make the periodic extension on either side well defined.
    """
    L, R = as_dyadic(L), as_dyadic(R)
    if L > 0 or R < 0:
        raise PeriodSeedMismatch(f"anchors must satisfy L <= 0 <= R, got L={L}, R={R}")
    pts = _raw_points(core)
    if len(pts) < 2:
        raise PeriodSeedMismatch("core needs vertices at both L-1 and R+1")
    _check_monotone(pts)
    slopes = _checked_slopes(pts)
    lo, hi = L - 1, R + 1
    if _dy(pts[0][:2]) != lo or _dy(pts[-1][:2]) != hi:
        raise PeriodSeedMismatch(
            f"core spans [{_dy(pts[0][:2])}, {_dy(pts[-1][:2])}], expected [{lo}, {hi}]"
        )
    g = lambda x: _dy(_k.interp(pts, slopes, x.num, x.exp))  # noqa: E731
    if g(hi) != g(R) + 1:
        raise PeriodSeedMismatch(f"g(R+1) = {g(hi)} but g(R) + 1 = {g(R) + 1}")
    if g(L) != g(lo) + 1:
        raise PeriodSeedMismatch(f"g(L) = {g(L)} but g(L-1) + 1 = {g(lo) + 1}")
    kept, kept_slopes = _k.prune(pts, slopes, False)
    return TLikeMap(L, R, kept, kept_slopes)


def translation(n):
    """The element ``x -> x + n`` of F."""
    return FMap((), (), n, n)


def identity_f():
    return translation(0)


def identity_tlike():
    return TLikeMap(Dyadic(0), Dyadic(0), [(-1, 0, -1, 0), (1, 0, 1, 0)], [0])


# -- evaluation and group operations -----------------------------------------


def eval_f(f, x):
    return f(x)


def eval_tlike(g, x):
    return g(x)


def compose_f(f, h):
    """The composite ``f o h`` (apply h first)."""
    pts, slopes = _k.compose_f(
        f._pts, f._slopes, f.l, f.r, h._pts, h._slopes, h.l, h.r
    )
    return FMap(pts, slopes, f.l + h.l, f.r + h.r)


def invert_f(f):
    return FMap(_k.swap(f._pts), [-s for s in f._slopes], -f.l, -f.r)


def invert_tlike(g):
    """Inverse of an eventually T-like map.

    The inverse is periodic for ``y >= g(R)`` and ``y <= g(L-1)``, so its
    anchors are ``max(0, g(R))`` and ``min(0, g(L))``.
    """
    R2 = max(Dyadic(0), g(g.R))
    L2 = min(Dyadic(0), g(g.L))
    a = _inverse_point(g, L2 - 1)
    b = _inverse_point(g, R2 + 1)
    pts = []
    for x in g.vertices_in(a, b):
        y = g(x)
        pts.append((y.num, y.exp, x.num, x.exp))
    kept, slopes = _k.prune(pts, _k.segment_slopes(pts), False)
    return TLikeMap(L2, R2, kept, slopes)


def _inverse_point(g, y):
    # the swapped core is periodic for y <= g(L-1) and y >= g(R)
    lo = g(g.L - 1).pair
    hi = g(g.R).pair
    return _dy(_k.eval_periodic(_k.swap(g._pts), [-s for s in g._slopes], lo[0], lo[1], hi[0], hi[1], y.num, y.exp))


def embed_f_as_tlike(f):
    """View ``f`` as an eventually T-like map with L = min(0, x_1), R = max(0, x_n)."""
    if f._pts:
        L = min(Dyadic(0), f.first_x)
        R = max(Dyadic(0), f.last_x)
    else:
        L = R = Dyadic(0)
    xs = {L - 1, R + 1}
    xs.update(x for x, _ in f.breaks)
    pts = []
    for x in sorted(xs):
        y = f(x)
        pts.append((x.num, x.exp, y.num, y.exp))
    kept, slopes = _k.prune(pts, _k.segment_slopes(pts), False)
    return TLikeMap(L, R, kept, slopes)


def translational_parts(f):
    return f.l, f.r


def variation(g, x):
    """``g(x) - x``; works for either kind of map."""
    x = as_dyadic(x)
    return g(x) - x


# -- JSON ---------------------------------------------------------------------


def _points_json(pts):
    return [{"x": str(_dy(p[:2])), "y": str(_dy(p[2:]))} for p in pts]


def fmap_to_json(f):
    return {"type": "F", "l": f.l, "r": f.r, "breaks": _points_json(f._pts)}


def tlike_to_json(g):
    return {"type": "TLike", "L": str(g.L), "R": str(g.R), "core": _points_json(g._pts)}


def _int_field(doc, key):
    value = doc.get(key)
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise FormatError(f"field {key!r} must be an integer")
    try:
        return int(value)
    except ValueError:
        raise FormatError(f"field {key!r} must be an integer") from None


def fmap_from_json(doc):
    if not isinstance(doc, dict) or doc.get("type") != "F":
        raise FormatError('expected an object with "type": "F"')
    breaks = doc.get("breaks", [])
    if not isinstance(breaks, list):
        raise FormatError('"breaks" must be a list')
    return validate_f(breaks, _int_field(doc, "l"), _int_field(doc, "r"))


def tlike_from_json(doc):
    if not isinstance(doc, dict) or doc.get("type") != "TLike":
        raise FormatError('expected an object with "type": "TLike"')
    core = doc.get("core")
    if not isinstance(core, list):
        raise FormatError('"core" must be a list')
    if "L" not in doc or "R" not in doc:
        raise FormatError('TLike element needs "L" and "R"')
    return validate_tlike(doc["L"], doc["R"], core)


def element_from_json(doc):
    kind = doc.get("type") if isinstance(doc, dict) else None
    if kind == "F":
        return fmap_from_json(doc)
    if kind == "TLike":
        return tlike_from_json(doc)
    raise FormatError('element JSON needs "type": "F" or "TLike"')
