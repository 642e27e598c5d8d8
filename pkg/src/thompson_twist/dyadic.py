"""Exact arithmetic in Z[1/2].

>>> a = Dyadic.parse("3/2^3")
>>> a + Dyadic(5, 3)
Dyadic('1')
>>> str(Dyadic(4, 3))
'1/2^1'
>>> Dyadic(-1, 1).floor()
-1
"""

import re
from fractions import Fraction
from numbers import Integral

from . import kernels as _k
from .errors import NonDyadic

__all__ = [
    "Dyadic",
    "ZERO",
    "ONE",
    "normalize",
    "add",
    "sub",
    "neg",
    "mul",
    "mul_pow2",
    "compare",
    "floor",
    "as_dyadic",
]

_GRAMMAR = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*2\s*\^\s*(\d+))?\s*\Z")


class Dyadic:
    """The number ``num / 2**exp``, always stored in canonical form.

    Canonical means ``exp == 0`` or ``num`` odd, so equality is field-wise.
    Instances are immutable and hashable; integer-valued ones hash like
    the matching ``int``.
    """

    __slots__ = ("num", "exp")

    def __new__(cls, num=0, exp=0):
        if not isinstance(num, Integral) or not isinstance(exp, Integral):
            raise TypeError("Dyadic(num, exp) takes integers")
        if exp < 0:
            raise ValueError("exponent must be non-negative")
        n, k = _k.normalize(int(num), int(exp))
        return cls._raw(n, k)

    @classmethod
    def _raw(cls, n, k):
        self = object.__new__(cls)
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "exp", k)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Dyadic is immutable")

    def __reduce__(self):
        return (Dyadic, (self.num, self.exp))

    @property
    def pair(self):
        """``(num, exp)`` as used by the kernels."""
        return self.num, self.exp

    # -- text ---------------------------------------------------------------

    @classmethod
    def parse(cls, text):
        """Read ``INT`` or ``INT/2^UINT``; non-canonical input is normalized."""
        if isinstance(text, bool):
            raise NonDyadic(f"not a dyadic rational: {text!r}")
        if isinstance(text, Integral):
            return cls(int(text))
        if not isinstance(text, str):
            raise NonDyadic(f"not a dyadic rational: {text!r}")
        m = _GRAMMAR.match(text)
        if m is None:
            raise NonDyadic(f"not a dyadic rational: {text!r}")
        return cls(int(m.group(1)), int(m.group(2) or 0))

    def __str__(self):
        if self.exp == 0:
            return str(self.num)
        return f"{self.num}/2^{self.exp}"

    def __repr__(self):
        return f"Dyadic('{self}')"

    def to_fraction(self):
        return Fraction(self.num, 1 << self.exp)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Dyadic._raw(*_k.add(self.num, self.exp, other.num, other.exp))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Dyadic._raw(*_k.sub(self.num, self.exp, other.num, other.exp))

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Dyadic._raw(*_k.sub(other.num, other.exp, self.num, self.exp))

    def __neg__(self):
        return Dyadic._raw(-self.num, self.exp)

    def __pos__(self):
        return self

    def __abs__(self):
        return self if self.num >= 0 else -self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Dyadic._raw(*_k.mul(self.num, self.exp, other.num, other.exp))

    __rmul__ = __mul__

    def mul_pow2(self, e):
        """Multiply by ``2**e``; ``e`` may be negative."""
        return Dyadic._raw(*_k.mul_pow2(self.num, self.exp, int(e)))

    def floor(self):
        return self.num >> self.exp

    def ceil(self):
        return -((-self.num) >> self.exp)

    def __floor__(self):
        return self.floor()

    def __ceil__(self):
        return self.ceil()

    def is_integer(self):
        return self.exp == 0

    def __int__(self):
        if self.exp:
            raise ValueError(f"{self} is not an integer")
        return self.num

    def __float__(self):
        return self.num / (1 << self.exp)

    # -- ordering ------------------------------------------------------------

    def compare(self, other):
        """-1, 0 or 1."""
        other = _coerce(other)
        if other is NotImplemented:
            raise TypeError(f"cannot compare Dyadic with {type(other).__name__}")
        return _k.cmp(self.num, self.exp, other.num, other.exp)

    def __eq__(self, other):
        if isinstance(other, Dyadic):
            return self.num == other.num and self.exp == other.exp
        if isinstance(other, Integral) and not isinstance(other, bool):
            return self.exp == 0 and self.num == other
        return NotImplemented

    def __hash__(self):
        if self.exp == 0:
            return hash(self.num)
        return hash((self.num, self.exp))

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return _k.cmp(self.num, self.exp, other.num, other.exp) < 0

    def __le__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return _k.cmp(self.num, self.exp, other.num, other.exp) <= 0

    def __gt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return _k.cmp(self.num, self.exp, other.num, other.exp) > 0

    def __ge__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return _k.cmp(self.num, self.exp, other.num, other.exp) >= 0

    def __bool__(self):
        return self.num != 0


def _coerce(value):
    if isinstance(value, Dyadic):
        return value
    if isinstance(value, Integral) and not isinstance(value, bool):
        return Dyadic._raw(int(value), 0)
    return NotImplemented


def as_dyadic(value):
    """Coerce int, str, Fraction or Dyadic; raise NonDyadic otherwise."""
    if isinstance(value, Dyadic):
        return value
    if isinstance(value, bool):
        raise NonDyadic(f"not a dyadic rational: {value!r}")
    if isinstance(value, Integral):
        return Dyadic(int(value))
    if isinstance(value, Fraction):
        d = value.denominator
        if d & (d - 1):
            raise NonDyadic(f"{value} has a denominator that is not a power of 2")
        return Dyadic(value.numerator, d.bit_length() - 1)
    if isinstance(value, str):
        return Dyadic.parse(value)
    raise NonDyadic(f"not a dyadic rational: {value!r}")


ZERO = Dyadic._raw(0, 0)
ONE = Dyadic._raw(1, 0)


# Functional spellings.

def normalize(n, k):
    return Dyadic(n, k)


def add(a, b):
    return a + b


def sub(a, b):
    return a - b


def neg(a):
    return -a


def mul(a, b):
    return a * b


def mul_pow2(a, e):
    return a.mul_pow2(e)


def compare(a, b):
    return a.compare(b)


def floor(a):
    return a.floor()
