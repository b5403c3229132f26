"""Exact scalar fields: the rationals and prime fields F_p.

Every structure constant in the engine is an element of one of these
fields. There is no floating point mode and no tolerance anywhere.
"""

from __future__ import annotations

import os
import re
from fractions import Fraction


class ScalarError(ValueError):
    pass


class RationalField:
    """The field QQ. Elements are ``fractions.Fraction`` (always normalized)."""

    name = "QQ"

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, float):
            raise ScalarError("floats are not exact scalars: %r" % (x,))
        return Fraction(x)

    def parse(self, s: str) -> Fraction:
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ScalarError("bad rational %r" % (s,)) from exc

    def format(self, x) -> str:
        return str(self(x))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    def __reduce__(self):
        return (RationalField, ())


QQ = RationalField()


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class Mod:
    """An element of F_p, stored by its least non-negative residue."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise ScalarError("mixing F_%d and F_%d" % (self.p, other.p))
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Mod(-self.v, self.p)

    def inverse(self) -> "Mod":
        if self.v == 0:
            raise ZeroDivisionError("0 has no inverse in F_%d" % self.p)
        return Mod(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * Mod(o, self.p).inverse()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return "Mod(%d, %d)" % (self.v, self.p)

    def __str__(self):
        return str(self.v)


class PrimeField:
    """The field F_p for a prime p."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ScalarError("%d is not prime" % p)
        self.p = p
        self.name = "GF(%d)" % p
        self.zero = Mod(0, p)
        self.one = Mod(1, p)

    def __call__(self, x) -> Mod:
        if isinstance(x, Mod):
            if x.p != self.p:
                raise ScalarError("element of F_%d given to F_%d" % (x.p, self.p))
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, int):
            return Mod(x, self.p)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ScalarError("%s has no image in F_%d" % (x, self.p))
            return Mod(x.numerator * pow(x.denominator, -1, self.p), self.p)
        raise ScalarError("cannot coerce %r into F_%d" % (x, self.p))

    def parse(self, s: str) -> Mod:
        try:
            return self(Fraction(s.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise ScalarError("bad F_%d scalar %r" % (self.p, s)) from exc

    def format(self, x) -> str:
        return str(self(x).v)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return self.name

    def __reduce__(self):
        return (PrimeField, (self.p,))


def GF(p: int) -> PrimeField:
    return PrimeField(p)


_GF_RE = re.compile(r"^(?:GF\(\s*(\d+)\s*\)|F_?(\d+)|GF(\d+))$", re.IGNORECASE)


def field_from_name(name: str):
    """Parse ``QQ`` or ``GF(p)`` (also ``F_p``, ``Fp``, ``GFp``)."""
    s = name.strip()
    if s.upper() in ("QQ", "Q", "RATIONAL", "RATIONALS"):
        return QQ
    m = _GF_RE.match(s)
    if m:
        p = int(next(g for g in m.groups() if g))
        return PrimeField(p)
    raise ScalarError("unknown scalar mode %r (use QQ or GF(p))" % (name,))


def default_field():
    """Scalar field from ``CARYB_SCALAR`` or QQ."""
    name = os.environ.get("CARYB_SCALAR")
    if not name:
        return QQ
    return field_from_name(name)
