"""Group-level operations on F: abelianization, automorphisms, twisted classes."""

from dataclasses import dataclass

from . import kernels as _k
from . import zlinalg
from .dyadic import Dyadic
from .errors import FormatError, ProbeMismatch, ValidationError, WindowInconsistency
from .plmap import (
    FMap,
    TLikeMap,
    compose_f,
    invert_f,
    invert_tlike,
    tlike_from_json,
    tlike_to_json,
    translation,
    validate_f,
)
from .zlinalg import IntMatrix

__all__ = [
    "AbPair",
    "Rev",
    "REV",
    "ConjBy",
    "AutWord",
    "ab",
    "is_derived_element",
    "commutator",
    "rev",
    "conj_by_tlike",
    "conj_window",
    "apply_aut",
    "h1_matrix",
    "REV_MATRIX",
    "PROBES",
    "inner",
    "verify_shift_lemma",
    "project_class",
    "twisted_conjugate",
    "autword_to_json",
    "autword_from_json",
]


@dataclass(frozen=True)
class AbPair:
    """Image of an element in H1(F) = Z x Z."""

    l: int
    r: int

    def __add__(self, other):
        return AbPair(self.l + other.l, self.r + other.r)

    def __neg__(self):
        return AbPair(-self.l, -self.r)

    def __sub__(self, other):
        return AbPair(self.l - other.l, self.r - other.r)

    def __iter__(self):
        yield self.l
        yield self.r


def ab(f):
    """Abelianization ``f -> (f_l, f_r)``."""
    return AbPair(f.l, f.r)


def is_derived_element(f):
    """True iff ``f`` is the identity near both ends, i.e. lies in [F, F]."""
    return f.l == 0 and f.r == 0


def commutator(f, h):
    """``f h f^-1 h^-1``."""
    return f * h * invert_f(f) * invert_f(h)


def rev(f):
    """Conjugate by ``x -> -x``: ``rev(f)(x) = -f(-x)``."""
    pts = [(-p[0], p[1], -p[2], p[3]) for p in reversed(f._pts)]
    return FMap(pts, tuple(reversed(f._slopes)), -f.r, -f.l)


# -- eventually T-like conjugation -------------------------------------------


def conj_window(f, g):
    """Interval ``[a, b]`` outside which ``g f g^-1`` is a pure translation.

    On the right this is ``|R_g| + |R_f| + |V_R| + |f_r| + 1`` with
    ``R_f`` the last vertex of f and ``V_R = g(R_g) - R_g``; the left bound
    mirrors it around the left periodic region ``x <= L_g - 1``.
    """
    zero = Dyadic(0)
    r_f = f.last_x if f._pts else zero
    l_f = f.first_x if f._pts else zero
    v_r = g(g.R) - g.R
    lo = g.L - 1
    v_l = g(lo) - lo
    b = abs(g.R) + abs(r_f) + abs(v_r) + abs(f.r) + 1
    a = -(abs(lo) + abs(l_f) + abs(v_l) + abs(f.l) + 1)
    return a, b


def conj_by_tlike(f, g):
    """``g o f o g^-1`` as an element of F.

    Candidate vertices inside the window come from the breaks of g^-1, the
    g-images of f's breaks and the points sent onto g's breaks by
    ``f o g^-1``.  Outside the window the tails are ``x + f_l`` and
    ``x + f_r``; a mismatch there raises :class:`WindowInconsistency`.
    """
    a, b = conj_window(f, g)
    gi = invert_tlike(g)
    glo, ghi = g._lo, g._hi
    ilo, ihi = gi._lo, gi._hi
    pts = _k.conj_vertices(
        f._pts, f._slopes, f.l, f.r,
        g._pts, g._slopes, glo, ghi,
        gi._pts, gi._slopes, ilo, ihi,
        a.num, a.exp, b.num, b.exp,
    )
    slopes = _k.segment_slopes(pts)
    if any(s is None for s in slopes):
        raise WindowInconsistency("conjugate has a slope outside 2^Z")
    kept, kept_slopes = _k.prune(pts, slopes, True)
    out = FMap(kept, kept_slopes, f.l, f.r)
    try:
        validate_f(out.breaks, f.l, f.r)
    except ValidationError as exc:
        raise WindowInconsistency(f"conjugate failed validation: {exc}") from exc
    return out


# -- automorphism words --------------------------------------------------------


class Rev:
    """The automorphism induced by ``x -> -x``."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Rev"

    def __reduce__(self):
        return (Rev, ())


REV = Rev()


@dataclass(frozen=True)
class ConjBy:
    """Conjugation ``f -> g f g^-1`` by an eventually T-like map."""

    g: TLikeMap


@dataclass(frozen=True)
class AutWord:
    """An automorphism of F written as a word in Rev and T-like conjugations.

    Factors act in list order: the first factor is applied first.
    """

    factors: tuple = ()

    def __post_init__(self):
        fs = tuple(self.factors)
        for fac in fs:
            if fac is REV:
                continue
            if not (isinstance(fac, ConjBy) and isinstance(fac.g, TLikeMap)):
                raise TypeError(f"bad automorphism factor {fac!r}")
        object.__setattr__(self, "factors", fs)

    def __call__(self, f):
        return apply_aut(self, f)

    def then(self, other):
        """Word for ``other o self``."""
        return AutWord(self.factors + other.factors)

    def __len__(self):
        return len(self.factors)

    @property
    def rev_count(self):
        return sum(1 for fac in self.factors if fac is REV)


def apply_aut(phi, f):
    for fac in phi.factors:
        f = rev(f) if fac is REV else conj_by_tlike(f, fac.g)
    return f


REV_MATRIX = IntMatrix.from_rows([[0, -1], [-1, 0]])

# ab-images (1, 1) and (0, 1) form a basis of Z x Z
PROBES = (translation(1), validate_f([(0, 0), (1, 2)], 0, 1))


def h1_matrix(phi):
    """Matrix of the induced map on H1(F) = Z x Z, acting on columns (l, r).

    Computed twice: from the parity of Rev factors, and by pushing the two
    probe elements through ``phi`` and solving for the matrix.  The two
    must agree.
    """
    analytic = REV_MATRIX if phi.rev_count % 2 else IntMatrix.identity(2)
    basis = IntMatrix.from_rows([[p.l for p in PROBES], [p.r for p in PROBES]])
    images = [apply_aut(phi, p) for p in PROBES]
    moved = IntMatrix.from_rows([[q.l for q in images], [q.r for q in images]])
    probed = moved @ zlinalg.unimodular_inverse(basis)
    if probed != analytic:
        raise ProbeMismatch(f"analytic {analytic.to_rows()} != probed {probed.to_rows()}")
    return analytic


def inner(k):
    """The inner automorphism ``z -> k z k^-1`` as a callable."""
    ki = invert_f(k)
    return lambda z: compose_f(compose_f(k, z), ki)


def verify_shift_lemma(g, k, x, phi):
    """Check ``(x g phi(x^-1)) k == x (g k) (tau_{k^-1} o phi)(x^-1)`` exactly."""
    xi = invert_f(x)
    phixi = apply_aut(phi, xi)
    lhs = x * g * phixi * k
    tau = inner(invert_f(k))
    rhs = x * (g * k) * tau(phixi)
    return lhs == rhs


def project_class(f, phi):
    """Image of ``f`` in Coker(1 - H1(phi)), constant on twisted classes."""
    return zlinalg.class_rep(list(ab(f)), h1_matrix(phi))


def twisted_conjugate(h, f, phi):
    """``h f phi(h^-1)``."""
    return h * f * apply_aut(phi, invert_f(h))


# -- JSON ---------------------------------------------------------------------


def autword_to_json(phi):
    out = []
    for fac in phi.factors:
        if fac is REV:
            out.append({"kind": "rev"})
        else:
            out.append({"kind": "conj", "g": tlike_to_json(fac.g)})
    return {"factors": out}


def autword_from_json(doc):
    if not isinstance(doc, dict) or not isinstance(doc.get("factors"), list):
        raise FormatError('automorphism JSON needs a "factors" list')
    factors = []
    for item in doc["factors"]:
        kind = item.get("kind") if isinstance(item, dict) else None
        if kind == "rev":
            factors.append(REV)
        elif kind == "conj":
            factors.append(ConjBy(tlike_from_json(item.get("g"))))
        else:
            raise FormatError(f"unknown automorphism factor {item!r}")
    return AutWord(tuple(factors))

